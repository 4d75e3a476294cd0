import pytest
from hypothesis import given, settings, strategies as st

from dvfreduce.dvf import (
    RelationGraph,
    VectorField,
    add_relations,
    format_pairs,
    gen_orders,
    induced_relation,
    is_adm_vector_field,
    is_discrete_vector_field,
    parse_pairs,
    would_create_cycle,
)
from dvfreduce.errors import BoundsError, FormatError
from dvfreduce.gf2core import Gf2Matrix
from oracles import floyd_warshall_closure, is_adm_brute, kahn_acyclic, relation_edges, vpath_has_loop
from strategies import WORKED_EXAMPLE, matrices


def one_based(pairs):
    return {(u + 1, v + 1) for u, v in pairs}


class TestIsDiscreteVectorField:
    def test_worked_example_field(self, worked):
        assert is_discrete_vector_field(worked, VectorField([(2, 3), (1, 2), (0, 0)]))

    def test_empty_field(self, worked):
        assert is_discrete_vector_field(worked, VectorField())
        assert is_discrete_vector_field(Gf2Matrix(0, 0), VectorField())

    def test_duplicate_row(self, worked):
        assert not is_discrete_vector_field(worked, VectorField([(0, 0), (0, 2)]))

    def test_duplicate_col(self, worked):
        assert not is_discrete_vector_field(worked, VectorField([(0, 1), (1, 1)]))

    def test_zero_entry(self, worked):
        assert not is_discrete_vector_field(worked, VectorField([(2, 0)]))

    @pytest.mark.parametrize("pair", [(4, 0), (0, 4), (-1, 0), (9, 9)])
    def test_out_of_range_is_false_not_error(self, worked, pair):
        assert not is_discrete_vector_field(worked, VectorField([pair]))


class TestGenOrders:
    def test_worked_example(self, worked):
        # 1-based: 1 > 2; then 2 > 3 and 2 > 4; nothing for (3,4)
        assert gen_orders(worked, 0, 0) == {1}
        assert gen_orders(worked, 1, 2) == {2, 3}
        assert gen_orders(worked, 2, 3) == set()

    def test_out_of_range(self, worked):
        with pytest.raises(BoundsError):
            gen_orders(worked, 4, 0)

    @given(matrices(min_rows=1), st.data())
    def test_definition(self, M, data):
        i = data.draw(st.integers(0, M.nrows - 1))
        j = data.draw(st.integers(0, M.ncols - 1))
        assert gen_orders(M, i, j) == {x for x in range(M.nrows) if x != i and M.get(x, j)}


class TestRelationGraph:
    def test_first_relation(self):
        R = add_relations(RelationGraph(4), 0, {1})
        assert R.edges == {(0, 1)}
        assert R.closure == {(0, 1)}

    def test_worked_example_closure(self):
        R = add_relations(RelationGraph(4, [(0, 1)]), 1, {2, 3})
        assert R.closure == {(0, 1), (1, 2), (1, 3), (0, 2), (0, 3)}
        # the list-of-paths form [[2,4],[2,3],[1,2],[1,2,4],[1,2,3]] as reachability pairs
        assert one_based(R.closure) == {(2, 4), (2, 3), (1, 2), (1, 4), (1, 3)}

    def test_empty_targets_unchanged(self):
        R = RelationGraph(5, [(0, 1), (1, 2)])
        S = add_relations(R, 3, set())
        assert S.closure == R.closure
        assert S.edges == R.edges

    def test_input_not_mutated(self):
        R = RelationGraph(3, [(0, 1)])
        add_relations(R, 1, {2})
        assert R.edges == {(0, 1)}
        assert R.closure == {(0, 1)}

    def test_bounds(self):
        with pytest.raises(BoundsError):
            add_relations(RelationGraph(3), 3, {0})
        with pytest.raises(BoundsError):
            add_relations(RelationGraph(3), 0, {5})

    @settings(max_examples=300)
    @given(st.integers(1, 9).flatmap(
        lambda n: st.tuples(st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=25))
    ))
    def test_incremental_closure_matches_floyd_warshall(self, case):
        n, edges = case
        R = RelationGraph(n)
        for k, (u, v) in enumerate(edges):
            R = add_relations(R, u, {v})
            assert R.closure == floyd_warshall_closure(n, edges[: k + 1])
        assert R.has_loop() == (not kahn_acyclic(n, edges))

    @settings(max_examples=300)
    @given(st.integers(1, 8).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=12),
            st.integers(0, n - 1),
            st.sets(st.integers(0, n - 1), max_size=n),
        )
    ))
    def test_would_create_cycle_matches_recomputation(self, case):
        n, edges, src, targets = case
        # only meaningful on loop-free relations, as in the row scan
        edges = [(u, v) for u, v in edges if u < v]
        R = RelationGraph(n, edges)
        after = floyd_warshall_closure(n, edges + [(src, t) for t in targets])
        assert would_create_cycle(R, src, targets) == any((u, u) in after for u in range(n))


class TestWouldCreateCycle:
    def test_cycle_one_two_one(self):
        # after (1,1): 1 > 2; (2,2) would add 2 > 1
        R = RelationGraph(4, [(0, 1)])
        assert would_create_cycle(R, 1, {0, 3})

    def test_cycle_four_two(self):
        R = RelationGraph(4, [(1, 3)])
        assert would_create_cycle(R, 3, {1})

    def test_empty_relation(self):
        R = RelationGraph(4)
        assert not would_create_cycle(R, 0, {1, 2, 3})
        assert would_create_cycle(R, 2, {2})


class TestIsAdmVectorField:
    def test_worked_example_final_state(self, worked):
        V = VectorField([(0, 0), (1, 2), (2, 3)])
        R = RelationGraph(4, [(0, 1), (1, 2), (1, 3)])
        assert is_adm_vector_field(worked, V, R)
        assert one_based(R.edges) == {(1, 2), (2, 3), (2, 4)}

    def test_empty(self, worked):
        assert is_adm_vector_field(worked, VectorField(), RelationGraph(4))

    def test_loop_rejected(self, worked):
        V = VectorField([(0, 0), (1, 1)])
        assert vpath_has_loop(WORKED_EXAMPLE, V.pairs)
        assert not is_adm_vector_field(worked, V, induced_relation(worked, V))

    def test_relation_must_match_field(self, worked):
        V = VectorField([(0, 0)])
        assert not is_adm_vector_field(worked, V, RelationGraph(4))
        assert not is_adm_vector_field(worked, V, RelationGraph(4, [(0, 1), (2, 3)]))
        assert not is_adm_vector_field(worked, V, RelationGraph(5, [(0, 1)]))

    def test_not_a_field(self, worked):
        assert not is_adm_vector_field(worked, VectorField([(2, 0)]), RelationGraph(4))

    @settings(max_examples=400)
    @given(matrices(min_rows=1, max_rows=7, max_cols=7), st.data())
    def test_agrees_with_vpath_enumeration(self, M, data):
        cells = list(M.entries())
        pairs = data.draw(st.lists(st.sampled_from(cells), unique=True, max_size=6)) if cells else []
        V = VectorField(pairs)
        rows = M.to_rows()
        got = is_discrete_vector_field(M, V) and is_adm_vector_field(M, V, induced_relation(M, V))
        assert got == is_adm_brute(rows, pairs)
        if is_discrete_vector_field(M, V):
            R = induced_relation(M, V)
            assert R.edges == relation_edges(rows, pairs)
            assert kahn_acyclic(M.nrows, R.edges) == (not R.has_loop())


class TestPairFormat:
    def test_round_trip(self):
        pairs = [(2, 3), (1, 2), (0, 0)]
        text = format_pairs(pairs)
        assert text == "2 3\n1 2\n0 0\n"
        assert parse_pairs(text) == pairs
        assert format_pairs(pairs, 1) == "3 4\n2 3\n1 1\n"

    def test_comments_and_blank_lines(self):
        assert parse_pairs("# field\n\n0 1\n") == [(0, 1)]

    @pytest.mark.parametrize("text", ["0\n", "0 1 2\n", "a b\n", "-1 0\n"])
    def test_malformed(self, text):
        with pytest.raises(FormatError):
            parse_pairs(text)
