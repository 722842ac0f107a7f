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

import io
import json
from itertools import permutations
from unittest.mock import patch

import pytest

from pseudoforest_minors.canon import canonical_form
from pseudoforest_minors.catalog import lookup
from pseudoforest_minors.cli import main
from pseudoforest_minors.codec import decode_graph6, encode_graph6, parse_edge_list
from pseudoforest_minors.graph import (
    butterfly,
    complete,
    cycle,
    diamond,
    wheel,
)
from pseudoforest_minors.models import CheckResult, VerificationReport


@pytest.fixture
def graph6_file(tmp_path):
    """Write graph6 lines to a temporary file and return its path"""

    def write(*graphs):
        path = tmp_path / "graphs.g6"
        path.write_text("".join(encode_graph6(g) + "\n" for g in graphs))
        return str(path)

    return write


@pytest.fixture
def failing_report():
    return VerificationReport(
        checks=[
            CheckResult(name="count", passed=True),
            CheckResult(name="obstruction", passed=False, counterexamples=["E?~o"]),
        ]
    )


class TestCheck:
    def test_member_with_apex(self, graph6_file, capsys):
        rc = main(["check", "--class", "apex-pseudoforest", "--input", graph6_file(wheel(7))])
        assert rc == 0
        assert capsys.readouterr().out == f"{encode_graph6(wheel(7))} MEMBER apex=7\n"

    def test_member_from_stdin(self, capsys):
        with patch("sys.stdin", io.StringIO(encode_graph6(complete(3)) + "\n")):
            assert main(["check", "--class", "apex-pseudoforest"]) == 0
        assert capsys.readouterr().out.endswith("MEMBER apex=0\n")

    def test_nonmember_names_obstruction(self, capsys):
        with patch("sys.stdin", io.StringIO(encode_graph6(lookup("O3_2")) + "\n")):
            rc = main(["check", "--class", "apex-pseudoforest", "--witness"])
        assert rc == 1
        assert capsys.readouterr().out.strip().endswith("NONMEMBER obstruction=O3_2")

    def test_pseudoforest_witness(self, graph6_file, capsys):
        rc = main(
            ["check", "--class", "pseudoforest", "--witness", "--input", graph6_file(butterfly())]
        )
        assert rc == 1
        assert capsys.readouterr().out.strip().endswith("NONMEMBER obstruction=butterfly")

    def test_mixed_stream(self, graph6_file, capsys):
        rc = main(["check", "--class", "pseudoforest", "--input", graph6_file(cycle(5), diamond())])
        assert rc == 1
        lines = capsys.readouterr().out.splitlines()
        assert [line.split()[1] for line in lines] == ["MEMBER", "NONMEMBER"]

    def test_edge_list_input(self, tmp_path, capsys):
        path = tmp_path / "triangle.txt"
        path.write_text("n 3\n0 1\n1 2\n0 2\n")
        assert main(["check", "--class", "pseudoforest", "--input", str(path)]) == 0
        assert "MEMBER" in capsys.readouterr().out

    def test_empty_input(self, capsys):
        with patch("sys.stdin", io.StringIO("")):
            assert main(["check", "--class", "pseudoforest"]) == 0
        assert capsys.readouterr().out == ""

    def test_malformed_input(self, capsys):
        with patch("sys.stdin", io.StringIO("C~~\n")):
            assert main(["check", "--class", "pseudoforest"]) == 2
        assert "pfminors: error:" in capsys.readouterr().err

    def test_missing_file(self, tmp_path, capsys):
        missing = str(tmp_path / "nope.g6")
        assert main(["check", "--class", "pseudoforest", "--input", missing]) == 2
        assert "cannot read" in capsys.readouterr().err

    def test_non_utf8_file(self, tmp_path, capsys):
        path = tmp_path / "binary.g6"
        path.write_bytes(b"C~\n\xff\xfe\n")
        assert main(["check", "--class", "pseudoforest", "--input", str(path)]) == 2
        assert "not valid UTF-8" in capsys.readouterr().err

    def test_non_utf8_stdin(self, capsys):
        stream = io.TextIOWrapper(io.BytesIO(b"C~\n\xff\xfe\n"), encoding="utf-8")
        with patch("sys.stdin", stream):
            assert main(["check", "--class", "apex-pseudoforest"]) == 2
        assert "stdin is not valid UTF-8" in capsys.readouterr().err

    def test_unicode_digit_vertex_count(self, capsys):
        with patch("sys.stdin", io.StringIO("n ²\n0 1\n")):
            assert main(["check", "--class", "pseudoforest"]) == 2
        assert "expected 'n <count>'" in capsys.readouterr().err


class TestMinor:
    def test_found_with_witness(self, capsys):
        rc = main(["minor", "--host", encode_graph6(wheel(5)), "--pattern", "C~", "--witness"])
        assert rc == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "FOUND"
        assert sum(1 for line in lines if line.startswith("branch ")) == 4

    def test_not_found(self, capsys):
        rc = main(["minor", "--host", encode_graph6(cycle(9)), "--pattern", "O3_2"])
        assert rc == 1
        assert capsys.readouterr().out == "NOT-FOUND\n"

    def test_catalog_names(self, capsys):
        assert main(["minor", "--host", "O0_1", "--pattern", encode_graph6(diamond())]) == 0
        assert capsys.readouterr().out == "FOUND\n"

    def test_topological(self, capsys):
        rc = main(
            [
                "minor",
                "--topological",
                "--witness",
                "--host",
                encode_graph6(cycle(6)),
                "--pattern",
                encode_graph6(cycle(3)),
            ]
        )
        assert rc == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "FOUND"
        assert sum(1 for line in lines if line.startswith("path ")) == 3

    def test_arguments_are_trimmed(self, capsys):
        assert main(["minor", "--host", " O3_2 ", "--pattern", "C~ "]) == 0
        assert capsys.readouterr().out == "FOUND\n"

    def test_unknown_catalog_name(self, capsys):
        assert main(["minor", "--host", "O9_9", "--pattern", "C~"]) == 2
        assert "unknown catalog entry" in capsys.readouterr().err


class TestDecompose:
    def test_blocks(self, graph6_file, capsys):
        rc = main(["decompose", "--mode", "blocks", "--input", graph6_file(butterfly())])
        assert rc == 0
        record = json.loads(capsys.readouterr().out)
        assert record["cut_vertices"] == [0]
        assert record["blocks"] == [[0, 1, 2], [0, 3, 4]]

    def test_triconnected(self, graph6_file, capsys):
        rc = main(["decompose", "--mode", "triconnected", "--input", graph6_file(diamond())])
        assert rc == 0
        record = json.loads(capsys.readouterr().out)
        assert record["members"] == [encode_graph6(complete(3))] * 2

    def test_wheel_certificate(self, graph6_file, capsys):
        rc = main(["decompose", "--mode", "wheel-certificate", "--input", graph6_file(complete(5))])
        assert rc == 0
        record = json.loads(capsys.readouterr().out)
        assert record["certificate"]["base_r"] == 4
        assert [step["kind"] for step in record["certificate"]["steps"]] == ["add", "add"]

    def test_missing_certificate(self, graph6_file, capsys):
        rc = main(["decompose", "--mode", "wheel-certificate", "--input", graph6_file(cycle(6))])
        assert rc == 1
        assert json.loads(capsys.readouterr().out)["certificate"] is None


class TestCatalogCommand:
    def test_export(self, capsys):
        assert main(["catalog", "export", "--format", "g6"]) == 0
        assert len(capsys.readouterr().out.splitlines()) == 33

    def test_lookup(self, capsys):
        assert main(["catalog", "lookup", "O3_3", "--format", "g6"]) == 0
        out = capsys.readouterr().out.strip()
        assert canonical_form(decode_graph6(out)) == canonical_form(complete(5).delete_edge(0, 1))

    def test_lookup_edges(self, capsys):
        assert main(["catalog", "lookup", "O0_1"]) == 0
        assert capsys.readouterr().out.startswith("n 8\n")

    def test_lookup_unknown(self, capsys):
        assert main(["catalog", "lookup", "O5_1"]) == 2
        assert "unknown catalog entry" in capsys.readouterr().err


class TestVerifyCatalog:
    @patch("pseudoforest_minors.cli.CatalogVerifier")
    def test_failing_report(self, mock_verifier, failing_report, capsys):
        mock_verifier.create.return_value.run.return_value = failing_report
        rc = main(["verify-catalog", "--equivalence-n", "4", "--format", "lines"])
        assert rc == 1
        assert capsys.readouterr().out == "CHECK count PASS\nCHECK obstruction FAIL E?~o\n"
        config_dict = mock_verifier.create.call_args[0][0]
        assert config_dict["equivalence_n"] == 4
        assert config_dict["search_n"] is None

    @patch("pseudoforest_minors.cli.CatalogVerifier")
    def test_passing_report(self, mock_verifier, capsys):
        report = VerificationReport(checks=[CheckResult(name="count", passed=True)])
        mock_verifier.create.return_value.run.return_value = report
        rc = main(["verify-catalog", "--search-n", "7", "--prune", "--jobs", "2"])
        assert rc == 0
        assert capsys.readouterr().out.endswith("1/1 checks passed\n")
        config_dict = mock_verifier.create.call_args[0][0]
        assert config_dict["search_n"] == 7
        assert config_dict["prune"] is True
        assert config_dict["jobs"] == 2

    def test_invalid_config(self, capsys):
        assert main(["verify-catalog", "--equivalence-n", "12"]) == 2
        assert "pfminors: error:" in capsys.readouterr().err


class TestSearchCommand:
    def test_pseudoforest(self, capsys):
        rc = main(["search-obstructions", "--class", "pseudoforest", "--max-n", "5"])
        assert rc == 0
        lines = capsys.readouterr().out.splitlines()
        assert set(lines) == {canonical_form(diamond()), canonical_form(butterfly())}
        assert lines[0] == canonical_form(diamond())

    def test_ten_requires_flag(self, capsys):
        rc = main(["search-obstructions", "--class", "apex-pseudoforest", "--max-n", "10"])
        assert rc == 2
        assert "allow_n10" in capsys.readouterr().err

    def test_external_input(self, graph6_file, capsys):
        source = graph6_file(diamond(), cycle(4), complete(4))
        rc = main(
            ["search-obstructions", "--class", "pseudoforest", "--max-n", "4", "--input", source]
        )
        assert rc == 0
        assert capsys.readouterr().out == canonical_form(diamond()) + "\n"


class TestConvert:
    def test_edges_to_graph6(self, capsys):
        text = "n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
        with patch("sys.stdin", io.StringIO(text)):
            assert main(["convert", "--from", "edges", "--to", "g6"]) == 0
        assert capsys.readouterr().out == "C~\n"

    def test_graph6_to_dot(self, graph6_file, capsys):
        source = graph6_file(complete(4))
        rc = main(["convert", "--from", "g6", "--to", "dot", "--name", "K4", "--input", source])
        assert rc == 0
        out = capsys.readouterr().out
        assert out.startswith("graph K4 {")
        assert out.count("--") == 6

    def test_graph6_to_edges(self, capsys):
        with patch("sys.stdin", io.StringIO("Bw\n")):
            assert main(["convert", "--from", "g6", "--to", "edges"]) == 0
        assert capsys.readouterr().out == "n 3\n0 1\n0 2\n1 2\n"

    def test_minimal_relabelling(self, capsys):
        text = "n 4\n0 1\n1 2\n2 3\n"
        with patch("sys.stdin", io.StringIO(text)):
            assert main(["convert", "--from", "edges", "--to", "g6", "--minimal"]) == 0
        out = capsys.readouterr().out.strip()
        path4 = parse_edge_list(text)
        smallest = min(encode_graph6(path4.relabel(list(p))) for p in permutations(range(4)))
        assert out == smallest == "CL"


class TestArguments:
    def test_missing_required_option(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["minor", "--host", "C~"])
        assert excinfo.value.code == 2

    def test_unknown_command(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["frobnicate"])
        assert excinfo.value.code == 2
