import itertools

from hypothesis import given
from hypothesis import strategies as st

from conftest import partitions
from grassiso.deciders import (
    Verdict,
    richardson_isomorphic_sufficient,
    schubert_distinguishing_invariants,
    schubert_isomorphic,
    skew_xi,
)
from grassiso.harness import enumerate_partitions_in_box, enumerate_skew_shapes
from grassiso.partitions import BoxFrame, Partition, subdiagram_counts, transpose
from grassiso.skew import SkewShape, parse_skew, rotate180, transpose_skew

BOX_4x4 = list(enumerate_partitions_in_box(BoxFrame(4, 4)))


class TestSchubert:
    def test_examples(self, P):
        assert schubert_isomorphic(P(3, 1), P(2, 1, 1))
        assert not schubert_isomorphic(P(2, 2), P(2, 1, 1))
        assert schubert_isomorphic(Partition(), Partition())
        assert schubert_isomorphic(P(4, 4, 3, 3, 1), P(5, 4, 4, 2))

    @given(partitions(), partitions())
    def test_symmetric(self, lam, mu):
        assert schubert_isomorphic(lam, mu) == schubert_isomorphic(mu, lam)

    def test_equivalence_relation(self):
        classes = {}
        for lam in BOX_4x4:
            classes.setdefault(min(lam, transpose(lam)), []).append(lam)
        for lam, mu in itertools.product(BOX_4x4, repeat=2):
            same = min(lam, transpose(lam)) == min(mu, transpose(mu))
            assert schubert_isomorphic(lam, mu) == same
        assert all(len(members) <= 2 for members in classes.values())


class TestWitness:
    def test_counts_separate(self, P):
        report = schubert_distinguishing_invariants(P(2, 2), P(2, 1, 1))
        assert not report.isomorphic
        assert report.rung == 2 and report.size_index == 3

    def test_isomorphic(self, P):
        report = schubert_distinguishing_invariants(P(3, 1), P(2, 1, 1))
        assert report.isomorphic and report.rung == 0 and report.via == "transpose"
        assert schubert_distinguishing_invariants(P(2), P(2)).via == "equal"

    def test_size(self, P):
        assert schubert_distinguishing_invariants(P(2), P(3)).rung == 1

    def test_agrees_with_decider_and_names_a_real_difference(self):
        for lam, mu in itertools.product(BOX_4x4, repeat=2):
            report = schubert_distinguishing_invariants(lam, mu)
            assert report.isomorphic == schubert_isomorphic(lam, mu)
            assert (report.rung == 0) == report.isomorphic
            if report.rung == 1:
                assert lam.size != mu.size
            if report.rung == 2:
                i = report.size_index
                assert subdiagram_counts(lam)[i] != subdiagram_counts(mu)[i]

    def test_json(self, P):
        payload = schubert_distinguishing_invariants(P(2, 2), P(2, 1, 1)).to_json()
        assert payload["rung"] == 2 and payload["sizeIndex"] == 3 and payload["isomorphic"] is False


class TestRichardson:
    def test_examples(self):
        verdict = richardson_isomorphic_sufficient(parse_skew("2,1"), parse_skew("2,2 / 1"))
        assert verdict.verdict is Verdict.ISOMORPHIC
        verdict = richardson_isomorphic_sufficient(parse_skew("2,2"), parse_skew("3,1"))
        assert verdict.verdict is Verdict.UNKNOWN_CONJECTURED_NOT
        assert "conjectured" in verdict.note
        assert verdict.unmatched_left == (parse_skew("2,2"),)
        assert verdict.unmatched_right == (parse_skew("3,1"),)

    def test_never_claims_non_isomorphic(self):
        shapes = [s for n in range(1, 5) for s in enumerate_skew_shapes(n)]
        seen = {richardson_isomorphic_sufficient(a, b).verdict for a in shapes for b in shapes}
        assert seen == {Verdict.ISOMORPHIC, Verdict.UNKNOWN_CONJECTURED_NOT}

    def test_straight_shapes_match_schubert(self):
        for lam, mu in itertools.product(BOX_4x4, repeat=2):
            verdict = richardson_isomorphic_sufficient(SkewShape.straight(lam), SkewShape.straight(mu))
            assert verdict.isomorphic == schubert_isomorphic(lam, mu)

    @given(st.sampled_from([s for n in range(1, 6) for s in enumerate_skew_shapes(n)]))
    def test_orbit_is_isomorphic(self, theta):
        for image in (transpose_skew(theta), rotate180(theta), rotate180(transpose_skew(theta))):
            assert richardson_isomorphic_sufficient(theta, image).isomorphic

    def test_json(self):
        payload = richardson_isomorphic_sufficient(parse_skew("2"), parse_skew("1,1")).to_json()
        assert payload["verdict"] == "ISOMORPHIC"
        assert payload["unmatchedLeft"] == [] and payload["unmatchedRight"] == []


class TestSkewXi:
    @given(partitions())
    def test_straight_shape_uses_longest_hook(self, lam):
        if lam:
            assert skew_xi(SkewShape.straight(lam)) == lam.part(0) + len(lam) - 1

    def test_rotated_hook(self):
        assert skew_xi(parse_skew("2,2 / 1")) == 3
        assert skew_xi(SkewShape()) == 0
