import itertools

import pytest

from grassiso.errors import DomainError, ParseError
from grassiso.harness import enumerate_skew_shapes
from grassiso.partitions import Partition
from grassiso.skew import (
    SkewShape,
    connected_components_diag,
    from_partitions,
    is_skew,
    pack,
    parse_skew,
    rotate180,
    shape_equal,
    transpose_skew,
)
from oracles import edge_connected, generated_skew_sets, normalized

SHAPES_LE_6 = [s for n in range(1, 7) for s in enumerate_skew_shapes(n)]
HORIZONTAL = SkewShape(frozenset({(0, 0), (0, 1)}))
VERTICAL = SkewShape(frozenset({(0, 0), (1, 0)}))
ANTI_DIAGONAL = SkewShape(frozenset({(0, 1), (1, 0)}))
HOOK_21 = SkewShape(frozenset({(0, 0), (0, 1), (1, 0)}))
ROTATED_21 = SkewShape(frozenset({(0, 1), (1, 0), (1, 1)}))


class TestFromPartitions:
    def test_examples(self, P):
        assert from_partitions(P(1), P(2, 2)).cells == ROTATED_21.cells
        assert from_partitions(P(2, 1), P(2, 1)).cells == frozenset()
        assert from_partitions(P(1), P(2, 1)).cells == ANTI_DIAGONAL.cells

    def test_requires_containment(self, P):
        with pytest.raises(DomainError):
            from_partitions(P(3), P(2, 2))

    def test_translation_invariance(self, P):
        # The same boxes cut out of different pairs give the same shape.
        assert shape_equal(from_partitions(P(1), P(3, 2)), from_partitions(P(2, 1, 1), P(4, 3, 1)))

    def test_string_and_json_round_trip(self):
        for theta in SHAPES_LE_6:
            assert parse_skew(str(theta)) == theta
            assert SkewShape.from_json(theta.to_json()) == theta
            lam, nu = theta.to_partitions()
            assert from_partitions(lam, nu) == theta

    def test_json_rows(self):
        assert ROTATED_21.to_json() == {"rows": [[1, 2], [0, 2]]}

    def test_parse(self, P):
        assert parse_skew("4,3,2 / 2,1") == from_partitions(P(2, 1), P(4, 3, 2))
        assert parse_skew("2,1") == HOOK_21
        with pytest.raises(ParseError):
            parse_skew("2 / 3")
        with pytest.raises(ParseError):
            parse_skew("3 / 2 / 1")


class TestIsSkew:
    def test_examples(self, P):
        assert not is_skew({(0, 0), (1, 1)})
        assert is_skew({(0, 1), (1, 0)})
        assert is_skew(P(4, 2, 2, 1).cells())

    def test_gapped_rows_allowed(self):
        assert is_skew({(0, 2), (2, 0)})
        assert not is_skew({(0, 0), (2, 0)})

    def test_matches_brute_force_generation(self):
        # Every subset of a 4x4 grid with at most 6 cells, against all nu / lam in that grid.
        generated = generated_skew_sets(4, 4, 6)
        grid = [(r, c) for r in range(4) for c in range(4)]
        checked = 0
        for size in range(7):
            for subset in itertools.combinations(grid, size):
                cells = normalized(subset)
                if cells != frozenset(subset):
                    continue
                checked += 1
                assert is_skew(cells) == (cells in generated), sorted(cells)
        assert checked > 1000

    def test_constructor_rejects(self):
        with pytest.raises(DomainError):
            SkewShape(frozenset({(0, 0), (1, 1)}))


class TestSymmetries:
    def test_transpose_examples(self):
        assert transpose_skew(HORIZONTAL) == VERTICAL
        assert transpose_skew(ROTATED_21) == ROTATED_21
        assert transpose_skew(SkewShape()) == SkewShape()

    def test_rotate_examples(self, P):
        assert rotate180(ROTATED_21) == HOOK_21
        assert rotate180(SkewShape.straight(P(3, 3))) == SkewShape.straight(P(3, 3))
        assert rotate180(SkewShape.straight(P(1))) == SkewShape.straight(P(1))

    def test_involutions_commute(self):
        for theta in SHAPES_LE_6:
            assert transpose_skew(transpose_skew(theta)) == theta
            assert rotate180(rotate180(theta)) == theta
            anti = rotate180(transpose_skew(theta))
            assert anti == transpose_skew(rotate180(theta))
            assert rotate180(transpose_skew(anti)) == theta

    def test_shape_equal(self):
        assert shape_equal(HOOK_21, HOOK_21)
        assert not shape_equal(HORIZONTAL, transpose_skew(HORIZONTAL))


class TestComponents:
    def test_examples(self):
        assert connected_components_diag(ANTI_DIAGONAL) == [SkewShape.straight(Partition((1,)))] * 2
        assert connected_components_diag(ROTATED_21) == [ROTATED_21]
        assert connected_components_diag(SkewShape()) == []

    def test_ordered_south_west_first(self):
        bands = connected_components_diag(SkewShape(frozenset({(0, 3), (0, 4), (2, 0), (3, 0)})))
        assert bands == [VERTICAL, HORIZONTAL]

    def test_components_are_connected_skew_shapes(self):
        for theta in SHAPES_LE_6:
            components = connected_components_diag(theta)
            assert sum(len(c) for c in components) == len(theta)
            for component in components:
                assert is_skew(component.cells)
                assert edge_connected(component.cells)
                assert len(connected_components_diag(component)) == 1

    def test_pack_keeps_components(self):
        spread = SkewShape(frozenset({(0, 5), (0, 6), (4, 0), (5, 0)}))
        packed = pack(spread)
        assert packed == SkewShape(frozenset({(0, 1), (0, 2), (1, 0), (2, 0)}))
        assert connected_components_diag(packed) == connected_components_diag(spread)
        for theta in SHAPES_LE_6:
            assert pack(theta) == theta
