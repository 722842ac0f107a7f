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

import logging

import pytest

from pseudoforest_minors import enumeration
from pseudoforest_minors.canon import canonical_form
from pseudoforest_minors.config import EnumerationConfig
from pseudoforest_minors.enumeration import (
    CENSUS_ALL,
    CENSUS_CONNECTED,
    _augment_batch,
    batched,
    census_matches,
    enumerate_graphs,
    enumerate_level,
    forms_of,
    graphs_up_to,
    parallel_map,
)
from pseudoforest_minors.errors import EnumerationLimitError
from pseudoforest_minors.graph import Graph, complete, cycle, path


@pytest.fixture
def fresh_levels(monkeypatch):
    """Run with an empty level cache"""
    monkeypatch.setattr(enumeration, "_levels", {})


class TestCensus:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_all_graphs(self, n):
        level = enumerate_level(n)
        assert len(level.forms) == CENSUS_ALL[n]
        assert census_matches(level)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_connected_graphs(self, n):
        level = enumerate_level(n, connected_only=True)
        assert len(level.forms) == CENSUS_CONNECTED[n]
        assert census_matches(level)

    def test_connected_three_vertex_graphs(self):
        forms = set(enumerate_level(3, connected_only=True).forms)
        assert forms == {canonical_form(path(3)), canonical_form(complete(3))}

    def test_single_vertex(self):
        assert enumerate_level(1).forms == ("@",)

    def test_forms_are_sorted_and_canonical(self):
        forms = enumerate_level(5).forms
        assert list(forms) == sorted(forms)
        assert all(canonical_form(graph) == g6 for graph, g6 in zip(enumerate_graphs(5), forms))

    def test_graphs_up_to(self):
        graphs = list(graphs_up_to(4))
        assert len(graphs) == 1 + 2 + 4 + 11
        assert forms_of([cycle(4), cycle(4).relabel([3, 2, 1, 0])]) == {canonical_form(cycle(4))}

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [7, 8, 9])
    def test_larger_levels(self, n):
        assert len(enumerate_level(n).forms) == CENSUS_ALL[n]
        assert len(enumerate_level(n, connected_only=True).forms) == CENSUS_CONNECTED[n]


class TestLimits:
    @pytest.mark.parametrize("n", [0, -1, 11])
    def test_out_of_range(self, n):
        with pytest.raises(EnumerationLimitError):
            enumerate_level(n)

    def test_ten_needs_flag(self):
        with pytest.raises(EnumerationLimitError):
            enumerate_level(10)


class TestParallel:
    def test_batched(self):
        assert batched([1, 2, 3, 4, 5], 2) == [[1, 2], [3, 4], [5]]
        assert batched([], 3) == []

    def test_parallel_map_keeps_order(self):
        tasks = [-3, 1, -2, 5]
        serial = list(parallel_map(abs, tasks, EnumerationConfig(jobs=1), "abs"))
        pooled = list(parallel_map(abs, tasks, EnumerationConfig(jobs=2), "abs"))
        assert serial == pooled == [3, 1, 2, 5]

    def test_augment_batch(self):
        found = _augment_batch((["A_"], True))
        assert found == {canonical_form(path(3)), canonical_form(complete(3))}

    def test_workers_give_same_levels(self, fresh_levels):
        config = EnumerationConfig(jobs=2, batch_size=3)
        for n in range(1, 6):
            level = enumerate_level(n, config=config)
            assert len(level.forms) == CENSUS_ALL[n]

    def test_logs_each_level(self, fresh_levels, caplog):
        caplog.set_level(logging.INFO, logger="pseudoforest_minors.enumeration")
        enumerate_level(2)
        assert "Enumerated level n=2: 2 graphs" in caplog.text

    def test_cache(self, fresh_levels):
        first = enumerate_level(4)
        assert enumerate_level(4) is first
        assert Graph(1) in list(enumerate_graphs(1))
