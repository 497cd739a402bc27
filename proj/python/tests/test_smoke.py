import pytest

import infinitary as inf

INTRO = "p(f(a)).\nq :- 1{p(X)}.\n"


def test_formula_round_trip():
    f = inf.parse_formula("or{p; not p}")
    assert str(f) == "or{p; not p}"
    assert inf.parse_formula(str(f)) == f
    assert f.atoms == ["p"]
    assert f.rank == 3


def test_stable_models():
    assert inf.stable_models([inf.Formula("or{p; not p}")]) == [[], ["p"]]
    assert inf.stable_models([inf.Formula("p"), inf.Formula("or{p; r} -> q")]) == [["p", "q"]]


def test_strong_equivalence():
    p = inf.Formula("p")
    nnp = inf.Formula("not not p")
    assert not inf.strongly_equivalent(p, nnp)
    assert inf.se_counterexample(p, nnp) == (["p"], [], False)
    assert inf.strongly_equivalent(inf.Formula("not p"), inf.Formula("not not not p"))


def test_reduct():
    assert str(inf.reduct(inf.Formula("p -> q"), ["q"])) == "bot -> q"


def test_library_proofs_check():
    for name in inf.library_names():
        assert inf.check_proof(inf.library(name)) == [], name


def test_check_proof_reports_failures():
    messages = inf.check_proof("step 1 p |- q by Axiom\n")
    assert len(messages) == 1
    assert messages[0].startswith("step 1")


def test_synthesize():
    script = inf.synthesize(inf.Formula("((p -> q) -> p) -> p"))
    assert inf.check_proof(script) == []
    with pytest.raises(inf.InfinitaryError, match="NotTautological"):
        inf.synthesize(inf.Formula("p"))


def test_transform_reduct():
    script = inf.library("example1", size=2)
    out = inf.transform_reduct(script, ["p(0)"])
    assert inf.check_proof(out) == []


def test_solve_and_ground():
    for depth in (2, 3, 4):
        assert inf.solve(INTRO, depth) == [["p(f(a))", "q"]]
    assert len(inf.ground(INTRO, 2)) == 2


def test_translate_aggregate():
    domain = [inf.Formula("p(1)"), inf.Formula("p(2)")]
    at_most_zero = inf.translate_aggregate(None, 0, domain)
    assert inf.strongly_equivalent(at_most_zero, inf.Formula("and{not p(1); not p(2)}"))


def test_errors():
    with pytest.raises(inf.InfinitaryError, match="SyntaxError"):
        inf.parse_formula("p ->")
    with pytest.raises(inf.InfinitaryError, match="UnknownTheoremName"):
        inf.library("nonexistent")
