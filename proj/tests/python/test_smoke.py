import pathlib

import pytest

import elx

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def read(name):
    return (FIXTURES / name).read_text()


def test_normalize_concept():
    assert elx.normalize_concept("B and A and Top and A") == "A and B"


def test_reflexive_entailment():
    v = elx.decide(read("reflexive.elx"), "A SubClassOf exists r.A")
    assert v["status"] == "ENTAILED"
    assert v["level"] == 0
    assert v["definitive"]
    assert v["counterexample"] is None


def test_counterexample_is_reported():
    v = elx.decide(read("successors.elx"), "A SubClassOf D")
    assert v["status"] == "NOT_ENTAILED"
    cx = v["counterexample"]
    assert "A" in cx["concepts"]
    assert not cx["concepts"].get("D")


def test_unknown_on_long_chains():
    v = elx.decide(read("multichain.elx"), "A SubClassOf D", max_level=3)
    assert v["status"] == "UNKNOWN"
    assert len(v["levels"]) == 4


def test_fresh_names_for_nonground_goals():
    v = elx.decide("?X SubClassOf exists r.?X\n", "exists s.?Y SubClassOf exists s.exists r.?Y")
    assert v["status"] == "ENTAILED"
    assert v["fresh_names"] == {"Y": "F0"}


def test_refusal_outside_gelo():
    with pytest.raises(elx.FragmentError):
        elx.decide(read("shared_filler.elx"), "A SubClassOf D")


def test_parse_errors_are_raised():
    with pytest.raises(elx.ParseError):
        elx.decide("A SubClassOf\n", "A SubClassOf B")
    assert issubclass(elx.ParseError, elx.Error)


def test_classify_axiom():
    r = elx.classify_axiom("exists r.?X and exists s.?X SubClassOf exists t.?X")
    assert not r["lhs_linear"]
    assert not r["gelo"]
    assert elx.classify_axiom("exists r.?X SubClassOf exists s.?X")["gelt"]


def test_check_schema():
    assert elx.check_schema(read("split_filler.elx"), "A SubClassOf D", ["B", "C"])
    assert not elx.check_schema(read("successors.elx"), "A SubClassOf D", ["B", "C"])


def test_expand_levels():
    t = elx.expand(read("expansion.elx"), "A SubClassOf B", max_level=2)
    assert t["levels"] == [["A"], ["A", "exists r.A"], ["A", "exists r.A", "exists r.exists r.A"]]
    assert not t["fixpoint_reached"]


def test_check_model_reports_valuation():
    violations = elx.check_model(read("unsafe.model"), read("unsafe.elx"))
    assert violations == [("exists r.?X SubClassOf exists s.(?X and A)", "η(?X)={b}")]
    assert elx.check_model(read("successors.model"), read("successors.elx")) == []


def test_refute():
    assert elx.refute(read("reflexive.elx"), "A SubClassOf exists r.A", max_domain=2) is None
    found = elx.refute("", "A SubClassOf B", max_domain=1)
    assert found["concepts"]["A"] == ["a"]


def test_desugar_and_cli():
    assert "exists father.exists father.?__v0 SubClassOf exists grandfather.?__v0" in elx.desugar(read("grandfather.elx"))
    code, out, _ = elx.run_cli(["entails", str(FIXTURES / "grandfather.elx"), "--goal", "C SubClassOf exists grandfather.D"])
    assert code == 0
    assert out.startswith("ENTAILED")
