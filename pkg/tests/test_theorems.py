import jsonschema
import pytest

from twisted_steenrod import theorems as th


def _strip_ms(rep):
    d = rep.to_json()
    d.pop("ms")
    return d


def test_report_status_follows_ledger():
    ok = th.CheckReport("x", 1, [th.LedgerEntry(0, 1, 1)])
    bad = th.CheckReport("x", 1, [th.LedgerEntry(0, 1, 1), th.LedgerEntry(1, 2, 3)])
    info = th.CheckReport("x", 1, [th.LedgerEntry(1, 2, 3)], verdict=False)
    assert (ok.status, bad.status, info.status) == ("pass", "fail", "info")
    for r in (ok, bad, info):
        jsonschema.validate(r.to_json(), th.REPORT_SCHEMA)


@pytest.mark.parametrize("n", [0, 4, 8, 12])
def test_k2o_and_k2o2_pass(n):
    assert th.check_k2o(n).status == "pass"
    assert th.check_k2o2(n).status == "pass"


def test_k2o_degree_zero_entry():
    rep = th.check_k2o(8)
    first = rep.ledger[0]
    assert (first.degree, first.lhs, first.rhs) == (0, 1, 1)


def test_joker_content_recovered():
    rep = th.check_k2o2(8)
    content = [e for e in rep.ledger if e.label == "joker content"]
    assert [e.lhs for e in content] == [1, 1, 1, 1, 1, 0, 0, 0, 0]


def test_sq3_kappa10_is_zero():
    rep = th.check_sq3_kappa10()
    assert rep.status == "pass"
    byname = {e.label: e for e in rep.ledger}
    assert byname["phi(Sq1) phi(Sq2)(lambda10 (x) kappa)"].lhs == "0"
    assert byname["copies of Sq2 lambda10 (x) i1 kappa"].lhs == 2
    assert byname["phi(Sq2)(lambda10 (x) kappa)"].lhs == "Sq2 lambda10 (x) kappa"


@pytest.mark.parametrize("n", [0, 3, 8])
def test_thom_twist(n):
    assert th.check_thom_twist(n, n).status == "pass"


def test_thom_rejects_few_variables():
    with pytest.raises(ValueError):
        th.check_thom_twist(6, 3)


def test_thom_examples():
    from twisted_steenrod.unstable import BOType, PolyElement, thom_sq

    bo = BOType(6)
    one = PolyElement.one(bo)
    w1, w2 = PolyElement.generator(bo, 0), PolyElement.generator(bo, 1)
    assert thom_sq(1, one) == w1
    assert thom_sq(2, one) == w2
    # Sq2 u + w1 Sq1 u + (w1^2 + w2) u = 0
    assert thom_sq(2, one) + w1 * thom_sq(1, one) + (w1 * w1 + w2) == 0
    from twisted_steenrod.steenrod import SteenrodElement
    from twisted_steenrod.twisted import TwistedElement

    theta = TwistedElement.from_steenrod(SteenrodElement.sq(1))
    assert th.psi_action(theta, w1, bo) == thom_sq(1, w1)


def test_census_partitions():
    entries = th.census_partitions(20)
    by_j = {e.J: e for e in entries}
    assert by_j[()].nJ == 0 and by_j[()].kind == "TrivialQuot"
    assert by_j[(2,)].nJ == 8 and by_j[(2,)].kind == "TrivialQuot"
    assert by_j[(3,)].nJ == 10 and by_j[(3,)].kind == "JokerQuot"
    assert all(min(e.J, default=2) >= 2 and list(e.J) == sorted(e.J) for e in entries)


def test_shift_degree_rule():
    for n in range(12):
        assert th.shift_degree(n) == (4 * n if n % 2 == 0 else 4 * n - 2)


def test_census_through_20():
    entries, rep = th.abp_census(20)
    assert rep.status == "pass"
    free = [e for e in entries if e.kind == "Free"]
    assert all(e.multiplicity >= 0 for e in free)


def test_census_bound():
    with pytest.raises(ValueError):
        th.abp_census(32)


def test_negative_residual_detected():
    from twisted_steenrod.series import PoincareSeries

    with pytest.raises(th.NegativeResidual):
        th.free_multiplicities(PoincareSeries((1, 0, 0)), PoincareSeries((1, 2, 0)))


def test_conjecture_reports_both_readings():
    rep = th.explore_conjecture(8)
    assert rep.status == "info"
    labels = {e.label for e in rep.ledger}
    assert any(l.startswith("twisted-A1 ") for l in labels)
    assert any(l.startswith("twisted-A ") for l in labels)
    assert any("relation leaves subalgebra" in n for n in rep.notes)
    jsonschema.validate(rep.to_json(), th.REPORT_SCHEMA)


def test_distinguished_classes_are_unique():
    assert all(c.unique for c in th.distinguished_classes())


@pytest.mark.parametrize("name", sorted(th.CHECKS))
def test_checks_are_deterministic_and_valid(name):
    a = th.run_check(name, 8)
    b = th.run_check(name, 8)
    assert _strip_ms(a) == _strip_ms(b)
    assert a.status == "pass"
    jsonschema.validate(a.to_json(), th.REPORT_SCHEMA)


def test_unknown_check():
    with pytest.raises(KeyError):
        th.run_check("nope")
