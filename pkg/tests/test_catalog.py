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

from pseudoforest_minors.canon import canonical_form, isomorphic
from pseudoforest_minors.catalog import (
    CATALOG_SIZE,
    CLASS_SIZES,
    build_catalog,
    export_catalog,
    lookup,
)
from pseudoforest_minors.codec import decode_graph6, read_graph6_lines
from pseudoforest_minors.decomposition import vertex_connectivity
from pseudoforest_minors.errors import CatalogError, UnknownCatalogEntryError
from pseudoforest_minors.graph import complete, complete_bipartite, cycle, prism


@pytest.fixture
def catalog():
    return build_catalog()


class TestCatalogContents:
    def test_size(self, catalog):
        assert CATALOG_SIZE == 33
        assert len(catalog) == 33

    def test_class_sizes(self, catalog):
        for connectivity_class, size in CLASS_SIZES.items():
            assert len(catalog.by_class(connectivity_class)) == size

    def test_order(self, catalog):
        names = catalog.names()
        assert names[:4] == ["O0_1", "O0_2", "O0_3", "O1_1"]
        assert names[-3:] == ["O3_1", "O3_2", "O3_3"]

    def test_named_entries(self):
        assert isomorphic(lookup("O3_1"), prism())
        assert isomorphic(lookup("O3_2"), complete_bipartite(3, 3))
        assert isomorphic(lookup("O3_3"), complete(5).delete_edge(0, 1))

    def test_disconnected_entries(self):
        sizes = {
            name: (lookup(name).vertex_count, lookup(name).edge_count)
            for name in ("O0_1", "O0_2", "O0_3")
        }
        assert sizes == {"O0_1": (8, 10), "O0_2": (10, 12), "O0_3": (9, 11)}

    def test_pairwise_non_isomorphic(self, catalog):
        forms = {canonical_form(graph) for graph in catalog.graphs()}
        assert len(forms) == 33

    def test_connectivity_class_matches(self, catalog):
        for entry in catalog.entries:
            assert vertex_connectivity(entry.graph) == entry.connectivity_class, entry.name

    def test_connected_entries_are_bridgeless_with_min_degree_two(self, catalog):
        for entry in catalog.entries:
            if entry.connectivity_class == 0:
                continue
            assert entry.graph.min_degree() >= 2, entry.name
            assert entry.graph.bridges() == [], entry.name

    def test_degree_two_vertices_are_simplicial(self, catalog):
        for entry in catalog.entries:
            graph = entry.graph
            for v in graph.vertices():
                if graph.degree(v) == 2:
                    assert graph.is_simplicial(v), (entry.name, v)

    def test_vertex_counts(self, catalog):
        counts = sorted(graph.vertex_count for graph in catalog.graphs())
        assert counts[0] == 5
        assert counts[-1] == 10


class TestLookup:
    def test_lookup(self):
        graph = lookup("O0_1")
        assert graph.vertex_count == 8
        assert graph.edge_count == 10

    def test_unknown_name(self):
        with pytest.raises(UnknownCatalogEntryError):
            lookup("O4_1")
        with pytest.raises(KeyError):
            lookup("O1_13")
        with pytest.raises(CatalogError):
            lookup("K5")

    def test_build_is_cached(self):
        assert build_catalog() is build_catalog()


class TestEditing:
    def test_without(self, catalog):
        smaller = catalog.without("O2_5")
        assert len(smaller) == 32
        assert "O2_5" not in smaller.names()
        assert len(catalog) == 33

    def test_replace(self, catalog):
        edited = catalog.replace("O2_5", cycle(6))
        assert edited.get("O2_5").graph == cycle(6)
        assert edited.get("O2_5").connectivity_class == 2
        assert edited.names() == catalog.names()

    def test_edit_unknown(self, catalog):
        with pytest.raises(UnknownCatalogEntryError):
            catalog.without("nope")


class TestExport:
    def test_graph6(self, catalog):
        text = export_catalog("g6")
        graphs = list(read_graph6_lines(text))
        assert graphs == catalog.graphs()

    def test_dot(self):
        text = export_catalog("dot")
        assert text.count("graph O") == 33
        assert "graph O3_2 {" in text

    def test_edges(self):
        text = export_catalog("edges")
        headers = [line for line in text.splitlines() if line.startswith("# ")]
        assert len(headers) == 33
        assert headers[0] == "# O0_1"

    def test_custom_catalog(self, catalog):
        text = export_catalog("g6", catalog.without("O0_1"))
        assert len(text.splitlines()) == 32
        assert decode_graph6(text.splitlines()[0]) == lookup("O0_2")

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            export_catalog("json")  # type: ignore[arg-type]

    def test_json_dump_uses_graph6(self, catalog):
        dumped = catalog.get("O3_2").model_dump()
        assert decode_graph6(dumped["graph"]) == lookup("O3_2")
