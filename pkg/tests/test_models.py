# Copyright 2026 The pseudoforest-minors Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pytest
from pydantic import ValidationError

from pseudoforest_minors.config import EnumerationConfig, SearchConfig, VerifyConfig
from pseudoforest_minors.models import (
    CheckResult,
    EdgeAddition,
    VerificationReport,
    VertexSplit,
    WheelCertificate,
)


@pytest.fixture
def mixed_report():
    return VerificationReport(
        checks=[
            CheckResult(name="count", passed=True, elapsed=0.01),
            CheckResult(
                name="obstruction",
                passed=False,
                counterexamples=["E?~o"],
                details=["O3_2"],
                elapsed=1.5,
            ),
        ]
    )


class TestConfig:
    def test_defaults(self):
        config = VerifyConfig()
        assert config.equivalence_n == 6
        assert config.search_n is None
        assert config.structural_n is None
        assert config.jobs == 1
        assert not config.allow_n10

    def test_model_validate(self):
        config = SearchConfig.model_validate(
            {"class_name": "pseudoforest", "max_n": 7, "connected_only": True, "jobs": 4}
        )
        assert config.class_name == "pseudoforest"
        assert config.max_n == 7
        assert config.jobs == 4

    @pytest.mark.parametrize(
        "model, data",
        [
            (EnumerationConfig, {"jobs": 0}),
            (EnumerationConfig, {"batch_size": 0}),
            (SearchConfig, {"max_n": 11}),
            (SearchConfig, {"max_n": 10}),
            (SearchConfig, {"class_name": "planar"}),
            (VerifyConfig, {"equivalence_n": 10}),
            (VerifyConfig, {"search_n": 10}),
            (VerifyConfig, {"structural_n": 9}),
        ],
    )
    def test_rejects_invalid_values(self, model, data):
        with pytest.raises(ValidationError):
            model.model_validate(data)

    def test_ten_allowed_with_flag(self):
        assert SearchConfig(max_n=10, allow_n10=True).max_n == 10
        assert VerifyConfig(search_n=10, allow_n10=True).search_n == 10


class TestReport:
    def test_passed_and_failed(self, mixed_report):
        assert not mixed_report.passed
        assert [check.name for check in mixed_report.failed()] == ["obstruction"]
        assert VerificationReport().passed

    def test_get(self, mixed_report):
        assert mixed_report.get("count").passed
        with pytest.raises(KeyError):
            mixed_report.get("missing")

    def test_lines(self, mixed_report):
        assert mixed_report.to_lines() == "CHECK count PASS\nCHECK obstruction FAIL E?~o\n"
        assert VerificationReport().to_lines() == ""

    def test_text(self, mixed_report):
        text = mixed_report.to_text()
        assert "[PASS] count (0.01s)" in text
        assert "[FAIL] obstruction (1.50s)" in text
        assert "    O3_2" in text
        assert "    counterexample E?~o" in text
        assert text.endswith("1/2 checks passed\n")

    def test_extend(self, mixed_report):
        report = VerificationReport(checks=[CheckResult(name="equivalence", passed=True)])
        report.extend(mixed_report)
        assert [check.name for check in report.checks] == ["equivalence", "count", "obstruction"]


class TestCertificateModel:
    def test_discriminated_steps(self):
        certificate = WheelCertificate.model_validate(
            {
                "base_r": 4,
                "steps": [
                    {"kind": "add", "edge": [0, 2]},
                    {"kind": "split", "vertex": 4, "side_a": [0, 2], "side_b": [1, 3]},
                ],
            }
        )
        assert isinstance(certificate.steps[0], EdgeAddition)
        assert isinstance(certificate.steps[1], VertexSplit)
        assert certificate.steps[0].edge == (0, 2)

    def test_unknown_step_kind(self):
        with pytest.raises(ValidationError):
            WheelCertificate.model_validate({"base_r": 3, "steps": [{"kind": "merge"}]})
