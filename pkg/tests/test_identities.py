"""Identity registry: every entry verifies, false identities are caught."""

import math
from fractions import Fraction
from pathlib import Path

import pytest

from autoseries.errors import DomainError
from autoseries.evaluator import GAMMA_SERIES, PHI_SERIES
from autoseries.identities import (
    CoefficientFunction,
    Identity,
    IdentityKind,
    LhsTerm,
    Mul,
    Num,
    Route,
    TwoPowPoly,
    ValidityDomain,
    Zeta,
    builtin_registry,
    get_identity,
    make_corollary2_identity,
    verify,
    verify_corollary2,
    verify_woods_robbins,
)
from autoseries.precision import Precision
from autoseries.sequences import thue_morse

GRID = (2.0, 3.0, 4.0)


# -- registry contents ---------------------------------------------------------


def test_registry_has_at_least_thirteen_identities():
    assert len(builtin_registry()) >= 13


def test_registry_contains_all_named_entries():
    ids = {i.identity_id for i in builtin_registry()}
    required = {
        "lemma1",
        "corollary2-phi",
        "corollary2-gamma",
        "theorem3",
        "example4a",
        "example4b",
        "theorem5-zero",
        "theorem5-pows",
        "theorem5-eta",
        "prop6a",
        "prop6b",
        "prop6c",
        "example8",
        "example9",
        "shallit:2",
        "shallit:3",
        "shallit:10",
        "allouche-shallit",
        "woods-robbins",
    }
    assert required <= ids


def test_get_identity_normalizes_separators():
    assert get_identity("allouche_shallit").identity_id == "allouche-shallit"
    assert get_identity("woods_robbins").identity_id == "woods-robbins"
    with pytest.raises(KeyError):
        get_identity("nope")


def test_shallit_rhs_closed_forms():
    cache = {}

    class C(dict):
        def get_or_eval(self, key, eps, fn):
            return fn(eps)

    for base in (2, 3, 10):
        ident = get_identity(f"shallit:{base}")
        v, b = ident.rhs.bracket(None, 1e-12, Precision(target_eps=1e-12), C())
        assert abs(v - base / (base - 1) * math.log(base)) <= 1e-12 + b


def test_prop6a_statement_values():
    ident = get_identity("prop6a")
    (qa, ra) = ident.lhs
    assert qa.series.coeffs.low == -1.0 and qa.series.coeffs.high == 0.0
    assert ra.series.coeffs.low == pytest.approx(1.0 / 3.0)
    assert ra.series.coeffs.high == pytest.approx(4.0 / 3.0)


# -- the main verification sweep -------------------------------------------------


@pytest.mark.parametrize("ident", [i for i in builtin_registry() if i.kind is IdentityKind.DIRICHLET], ids=lambda i: i.identity_id)
def test_registry_identity_passes_on_grid(ident):
    # every exponent-parametrized identity on {2, 3, 4} (intersected with
    # its validity domain) at 1e-8
    for s in GRID:
        if not ident.valid_s.contains(s):
            continue
        rec = verify(ident, s, 1e-8)
        assert rec.passed, (ident.identity_id, s, rec)
        assert rec.lhs_bound + rec.rhs_bound <= 1e-8


@pytest.mark.parametrize("base,eps", [(2, 1e-4), (3, 1e-4), (10, 1e-4)])
def test_digit_harmonic_identities(base, eps):
    rec = verify(get_identity(f"shallit:{base}"), None, eps)
    assert rec.passed
    assert rec.residual <= eps


def test_binary_weighted_identity():
    rec = verify(get_identity("allouche-shallit"), None, 1e-8)
    assert rec.passed
    assert rec.residual <= 1e-8


# -- false identities must fail ---------------------------------------------------


def test_swapped_pairing_is_detected():
    # deliberately wrong: coefficients of the two 0/1 series exchanged
    wrong = Identity(
        identity_id="theorem3-swapped",
        lhs=(
            LhsTerm(CoefficientFunction(1.0, -1.0), PHI_SERIES, Route.DECOMPOSED),
            LhsTerm(CoefficientFunction(1.0, 1.0), GAMMA_SERIES, Route.DECOMPOSED),
        ),
        rhs=Mul((TwoPowPoly((0.0, 1.0)), Zeta())),
        description="wrong on purpose",
    )
    rec = verify(wrong, 2.0, 1e-8)
    assert not rec.passed
    assert rec.residual > rec.lhs_bound + rec.rhs_bound


def test_wrong_constant_is_detected():
    wrong = Identity(
        identity_id="example4a-wrong",
        lhs=(
            LhsTerm(CoefficientFunction(0.0, 5.0), PHI_SERIES, Route.DECOMPOSED),
            LhsTerm(CoefficientFunction(0.0, 3.0), GAMMA_SERIES, Route.DECOMPOSED),
        ),
        rhs=Mul((Num(Fraction(2, 3)), TwoPowPoly((0.0, 1.0)))),  # 2^(s+1)/3, not 2 pi^2/3
        valid_s=ValidityDomain(2.0),
        description="wrong on purpose",
    )
    assert not verify(wrong, 2.0, 1e-6).passed


# -- structural relations -----------------------------------------------------------


def test_example4a_is_theorem_instance_at_two():
    # 5 = 2^2+1 and 3 = 2^2-1, and the right side is 4 zeta(2) = 2 pi^2/3
    t3 = get_identity("theorem3")
    e4 = get_identity("example4a")
    s = 2.0
    assert t3.lhs[0].coefficient.value(s) == 5.0
    assert t3.lhs[1].coefficient.value(s) == 3.0
    assert e4.lhs[0].coefficient.value(s) == 5.0
    assert e4.lhs[1].coefficient.value(s) == 3.0
    r1 = verify(t3, s, 1e-9)
    r2 = verify(e4, s, 1e-9)
    assert abs(r1.rhs_value - r2.rhs_value) <= r1.rhs_bound + r2.rhs_bound
    assert abs(r2.rhs_value - 2 * math.pi**2 / 3) <= r2.rhs_bound + 1e-15


def test_missing_terms_vanish():
    # where consecutive 0/1 values are both zero, the combined term is exactly 0
    s = 2.0
    for n in (6, 10, 18, 24):
        combined = (2.0**s + 1) * thue_morse(n - 1) + (2.0**s - 1) * thue_morse(n)
        assert combined == 0.0
    # and those are the first four such indices
    hits = [n for n in range(1, 25) if thue_morse(n - 1) == 0 and thue_morse(n) == 0]
    assert hits == [6, 10, 18, 24]


# -- corollary-2 builder --------------------------------------------------------------


def test_corollary2_theorem_pairing_cancels_f():
    ident = make_corollary2_identity(
        CoefficientFunction(1.0, 1.0), CoefficientFunction(1.0, -1.0)
    )
    f_terms = [t for t in ident.lhs if t.series.coeffs.kind.value == "pm"]
    assert len(f_terms) == 1
    assert f_terms[0].coefficient.is_zero
    rec = verify(ident, 2.0, 1e-7)
    assert rec.passed


@pytest.mark.parametrize(
    "u,v,s",
    [
        (CoefficientFunction(0.0, 1.0), CoefficientFunction(0.0, 0.0), 2.0),
        (CoefficientFunction(0.0, 0.0), CoefficientFunction(0.0, 1.0), 3.0),
        (CoefficientFunction(1.0, 0.5), CoefficientFunction(-0.5, 2.0), 2.5),
    ],
)
def test_corollary2_combinations(u, v, s):
    rec = verify_corollary2(u, v, s, 1e-7)
    assert rec.passed


# -- the product check -----------------------------------------------------------------


def test_product_two_factors_exact():
    rec = verify_woods_robbins(2)
    assert rec.lhs_value == pytest.approx(2.0 / 3.0, rel=1e-12)
    assert rec.rhs_value == pytest.approx(math.sqrt(2.0) / 2.0, rel=1e-15)


def test_product_million_factors():
    rec = verify_woods_robbins(10**6, pairing=True)
    assert rec.passed and rec.heuristic
    assert rec.residual <= 1e-3
    raw = verify_woods_robbins(10**6, pairing=False)
    assert raw.passed
    assert abs(raw.lhs_value - rec.lhs_value) < 1e-5


def test_product_odd_factor_count():
    # pairing with a leftover factor equals the raw product of the same length
    a = verify_woods_robbins(101, pairing=True)
    b = verify_woods_robbins(101, pairing=False)
    assert a.lhs_value == pytest.approx(b.lhs_value, rel=1e-12)


def test_product_rejects_tiny_n():
    with pytest.raises(DomainError):
        verify_woods_robbins(1)


# -- verify() contract -------------------------------------------------------------------


def test_record_pass_iff_residual_within_bounds():
    rec = verify(get_identity("theorem3"), 3.0, 1e-8)
    assert rec.passed == (rec.residual <= rec.lhs_bound + rec.rhs_bound)
    assert rec.terms_used >= 1
    assert rec.wall_time_s >= 0.0


def test_verify_domain_errors():
    with pytest.raises(DomainError):
        verify(get_identity("example4a"), 3.0, 1e-8)  # only valid at s = 2
    with pytest.raises(DomainError):
        verify(get_identity("theorem3"), 1.0, 1e-8)
    with pytest.raises(DomainError):
        verify(get_identity("shallit:2"), 2.0, 1e-4)  # no exponent parameter
    with pytest.raises(DomainError):
        verify(get_identity("theorem3"), None, 1e-8)
    with pytest.raises(DomainError):
        verify(get_identity("theorem3"), 2.0, -1.0)


def test_verify_budgets_each_side_to_half_eps():
    eps = 1e-8
    rec = verify(get_identity("example9"), 2.0, eps)
    assert rec.lhs_bound <= eps / 2
    assert rec.rhs_bound <= eps / 2


def test_verify_numeric_fields_are_reproducible():
    a = verify(get_identity("example8"), 3.0, 1e-7)
    b = verify(get_identity("example8"), 3.0, 1e-7)
    assert (a.lhs_value, a.lhs_bound, a.rhs_value, a.rhs_bound, a.residual) == (
        b.lhs_value,
        b.lhs_bound,
        b.rhs_value,
        b.rhs_bound,
        b.residual,
    )
    assert a.terms_used == b.terms_used


def test_verify_at_high_working_precision():
    # the whole chain (coefficients, routes, closed forms) at 110 bits
    prec = Precision(working_bits=110, target_eps=1e-20)
    rec = verify(get_identity("theorem3"), 6.0, 1e-20, prec=prec)
    assert rec.passed
    assert rec.lhs_bound + rec.rhs_bound <= 1e-20
    assert rec.residual <= 1e-20


# -- report schema stability ----------------------------------------------------------------


def test_golden_report_fixture_parses():
    from autoseries.report import ReportDocument

    text = Path(__file__).parent.joinpath("data", "golden_report.json").read_text()
    doc = ReportDocument.from_json(text)
    assert [r.identity_id for r in doc.records] == ["theorem3", "shallit:2", "woods-robbins"]
    assert doc.records[0].s == 2.0
    assert doc.records[1].s is None
    assert doc.records[2].heuristic
    assert doc.all_passed
    assert doc.config.eps == 1e-6
    # round trip preserves every record field
    again = ReportDocument.from_json(doc.to_json())
    assert again.records == doc.records
