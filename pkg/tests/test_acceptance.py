"""Acceptance checks.

One test per criterion, every comparison at exact equality.  Each test
prints a single ACCEPTANCE line naming the criterion and its outcome, so a
verbose run reads as a checklist.  The whole module is expected to finish
in well under a minute.
"""

from fractions import Fraction

from ospdim.characters import (
    cummins_king_check,
    d21_sdim_closed,
    d21_sdim_t,
    osp1_dim_t,
    osp1_numerator,
    ospB_sdim_t,
    ospD_sdim_t,
    so_even_dim_t,
    so_odd_dim_t,
    sp_dim_t,
    spinor_sdim,
    spinor_tdim,
    verify_correspondence,
)
from ospdim.partitions import Partition, enum_partitions
from ospdim.schur import (
    dim_gl_frobenius,
    dim_gl_hook,
    dim_gl_weyl,
    sdim_gl,
    super_schur_eval,
)
from ospdim.series import TruncatedSeries, polynomial


def _report(name, ok):
    print(f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}")


def _heads(series, *coeffs):
    return all(series.coeffs[j] == c for j, c in enumerate(coeffs))


def test_criterion_1_golden_closed_form_series():
    ok = False
    try:
        assert osp1_numerator(2, 0, 4) == polynomial([1, -2, 0, 2, -1], 4)
        assert osp1_numerator(3, 1, 6) == polynomial([1, 0, -1], 6) ** 3
        assert str(osp1_numerator(3, 2, 6)) == "1 - t^3"
        assert osp1_numerator(4, 1, 12) == polynomial([1, 0, -1], 12) ** 6

        assert _heads(osp1_dim_t(3, 0, 4), 1, 0, 0, 0, 0)
        assert _heads(osp1_dim_t(3, 1, 4), 1, 3, 6, 10, 15)
        assert _heads(osp1_dim_t(3, 2, 4), 1, 3, 9, 18, 36)
        assert _heads(osp1_dim_t(3, 3, 4), 1, 3, 9, 19, 39)
        ok = True
    finally:
        _report("golden-closed-form-series", ok)


def test_criterion_2_golden_superdimension_polynomials():
    ok = False
    try:
        for n in (1, 2, 3):
            odd1 = ospB_sdim_t(n + 3, n, 1, 6)
            assert str(odd1) == "1 + 3t + 3t^2 + t^3"
            assert odd1.eval_at_one() == (8, True)
            odd2 = ospB_sdim_t(n + 3, n, 2, 8)
            assert str(odd2) == "1 + 3t + 9t^2 + 9t^3 + 9t^4 + 3t^5 + t^6"
            assert odd2.eval_at_one() == (35, True)
            even1 = ospD_sdim_t(n + 5, n, 1, 6)
            assert str(even1) == "1 + 10t^2 + 5t^4"
            assert even1.eval_at_one() == (16, True)
            even2 = ospD_sdim_t(n + 5, n, 2, 10)
            assert str(even2) == "1 + 10t^2 + 55t^4 + 45t^6 + 15t^8"
            assert even2.eval_at_one() == (126, True)
        ok = True
    finally:
        _report("golden-superdimension-polynomials", ok)


def test_criterion_3_golden_infinite_series_heads():
    ok = False
    try:
        for m in (1, 2, 3):
            assert _heads(
                ospB_sdim_t(m, m + 3, 1, 8), 1, -3, 6, -10, 15, -21, 28, -36, 45
            )
            assert _heads(
                ospB_sdim_t(m, m + 3, 2, 8), 1, -3, 9, -18, 36, -60, 100, -150, 225
            )
            assert _heads(ospD_sdim_t(m, m + 3, 1, 8), 1, 0, 6, 0, 15, 0, 28, 0, 45)
            assert _heads(ospD_sdim_t(m, m + 3, 2, 8), 1, 0, 6, 0, 21, 0, 55, 0, 120)
        assert _heads(d21_sdim_t(1, 8), 2, -2, 2, -2, 2, -2, 2, -2, 2)
        for p in (2, 3, 4):
            expected = [p + 1] + [2 * p * (-1) ** j for j in range(1, 9)]
            assert _heads(d21_sdim_t(p, 8), *expected)
        ok = True
    finally:
        _report("golden-infinite-series-heads", ok)


def test_criterion_4_identity_sweeps():
    ok = False
    try:
        for n in range(1, 6):
            for p in range(0, 6):
                assert osp1_dim_t(n, p, 14, route="sum") == osp1_dim_t(
                    n, p, 14, route="closed"
                ), (n, p)

        for case in ("ospB-vs-soOdd", "ospD-vs-soEven"):
            k_lo = 2 if case == "ospD-vs-soEven" else 1
            for k in range(k_lo, 5):
                for p in range(0, 5):
                    for n in (1, 2, 3):
                        report = verify_correspondence(case, k=k, p=p, n=n, order=12)
                        assert report.match, (case, k, p, n)
        for case in ("ospB-vs-osp1", "ospD-vs-sp"):
            for k in range(1, 5):
                for p in range(0, 5):
                    for m in (1, 2, 3):
                        report = verify_correspondence(case, k=k, p=p, m=m, order=12)
                        assert report.match, (case, k, p, m)
        for p in range(1, 5):
            assert verify_correspondence("d21-vs-so2", p=p, order=12).match, p

        for p in range(0, 6):
            one_col = polynomial([1] + [0] * p + [-1], 2 * p + 6)
            assert osp1_numerator(p + 1, p, 2 * p + 6) == one_col, p
            coeffs = [0] * (2 * p + 7)
            coeffs[0] = 1
            coeffs[p + 1] = -(p + 2)
            coeffs[p + 3] = p + 2
            coeffs[2 * p + 4] = -1
            assert osp1_numerator(p + 2, p, 2 * p + 6) == polynomial(coeffs, 2 * p + 6), p
        ok = True
    finally:
        _report("identity-sweeps", ok)


def test_criterion_5_oracle_equivalences():
    ok = False
    try:
        for lam in enum_partitions(14):
            form = lam.frobenius()
            for n in range(1, 7):
                w = dim_gl_weyl(n, lam)
                assert w == dim_gl_hook(n, lam) == dim_gl_frobenius(n, form), (lam, n)

        x1, y1 = Fraction(3, 2), Fraction(-2, 7)
        hooks = [lam for lam in enum_partitions(8) if lam[2] <= 2]
        for lam in hooks:
            base = super_schur_eval(lam, [x1], [y1])
            for t in (Fraction(1), Fraction(2), Fraction(-1, 2), Fraction(5, 3)):
                assert super_schur_eval(lam, [x1, t], [y1, -t]) == base, (lam, t)

        for lam in enum_partitions(10):
            for m in range(0, 4):
                for n in range(0, 4):
                    got = super_schur_eval(lam, [Fraction(1)] * m, [Fraction(-1)] * n)
                    assert got == sdim_gl(m, n, lam), (lam, m, n)

        for m, n in ((1, 1), (2, 1), (1, 2), (2, 2)):
            report = cummins_king_check(m, n, order=8, trials=5, seed=2026)
            assert report.match, (m, n)
        ok = True
    finally:
        _report("oracle-equivalences", ok)


def test_criterion_6_scope_of_evidence():
    """The analytic claims behind these series hold at every rank; a finite
    test run cannot re-derive them in general.  What this suite certifies is
    exact agreement on every printed golden value plus the cross-route and
    cross-family identities above, which together exercise each implemented
    formula on both finite and infinite-dimensional sides.  This test pins
    one golden value per family so the certified surface is explicit."""
    ok = False
    try:
        assert str(osp1_dim_t(2, 1, 4)) == "1 + 2t + 3t^2 + 4t^3 + 5t^4"
        assert str(ospB_sdim_t(4, 1, 1, 4)) == "1 + 3t + 3t^2 + t^3"
        assert str(so_odd_dim_t(3, 1, 4)) == "1 + 3t + 3t^2 + t^3"
        assert str(ospD_sdim_t(6, 1, 1, 4)) == "1 + 10t^2 + 5t^4"
        assert str(so_even_dim_t(5, 1, "next_to_last", 4)) == "1 + 10t^2 + 5t^4"
        assert str(sp_dim_t(3, 1, 4)) == "1 + 6t^2 + 15t^4"
        assert str(d21_sdim_t(2, 4)) == "3 - 4t + 4t^2 - 4t^3 + 4t^4"
        assert str(d21_sdim_closed(2, 4)) == "3 - 4t + 4t^2 - 4t^3 + 4t^4"
        assert str(spinor_tdim(2, 1, 4)) == "4 + 4t + 4t^2 + 4t^3 + 4t^4"
        assert spinor_sdim(2, 1) == 2
        assert dim_gl_weyl(5, Partition([5, 4, 4, 2])) == 1701
        assert sdim_gl(1, 3, Partition([2, 1])) == -2
        ok = True
    finally:
        _report("scope-of-evidence", ok)
