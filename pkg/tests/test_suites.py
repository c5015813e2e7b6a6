import pytest

from flagq.suites import ALIASES, SUITES, GridConfig, format_report, resolve, run_suite

SMALL = GridConfig(max_lambda=3, max_rows=2, max_flag=2, nx=(1, 2))


def test_registry():
    assert resolve("theorem-c") == "monomial-q"
    assert set(ALIASES.values()) <= set(SUITES)
    with pytest.raises(KeyError):
        resolve("nope")


def test_config_override():
    cfg = GridConfig(max_lambda=2).over(GridConfig(5, 3, 3, (1,)))
    assert cfg == GridConfig(2, 3, 3, (1,))


@pytest.mark.parametrize(
    "name",
    ["worked-examples", "pfaffian-eq", "hypothesis-survey", "monomial-q", "jacobi-trudi", "decomposition",
     "vexillary-equivalence", "structure"],
)
def test_small_grids_pass(name):
    rep = run_suite(name, SMALL)
    assert rep.results
    assert rep.passed, rep.failures[:3]
    keys = [repr(k) for k, _, _ in rep.results]
    assert keys == sorted(keys)


def test_report_header_names_the_locus():
    rep = run_suite("worked-examples")
    text = format_report(rep)
    assert text.splitlines()[0] == f"# suite worked-examples: {SUITES['worked-examples'].locus}"
    assert "PASS" in text
