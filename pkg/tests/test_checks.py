"""The invariant suite itself: everything passes, mutation is caught."""

from torsorkit import checks


def test_suite_all_pass_small_range():
    results = checks.run_suite(n_lo=2, n_hi=6, seed=0)
    assert all(r.passed for r in results), [
        (r.name, r.counterexample) for r in results if not r.passed
    ]
    names = [r.name for r in results]
    assert "cyclic-origin-independence" in names
    assert "curve-combine-vs-group-law" in names
    assert all(r.cases > 0 for r in results)


def test_suite_catches_injected_mutation():
    results = checks.run_suite(n_lo=2, n_hi=4, mutate=True)
    by_name = {r.name: r for r in results}
    bad = by_name["cyclic-origin-independence"]
    assert not bad.passed
    assert bad.counterexample is not None
    assert {"points", "origin", "value", "base_value", "n", "weights"} <= set(
        bad.counterexample
    )
    # the mutation is scoped to the sweep; everything else still passes
    assert all(r.passed for r in results if r.name != "cyclic-origin-independence")


def test_torsor_axiom_suite_runs_against_both_numeric_instances():
    by_name = {r.name: r for r in checks.run_suite(n_lo=2, n_hi=3, seed=1)}
    assert by_name["torus-identity-axiom"].passed
    assert by_name["torus-origin-independence"].passed
    assert by_name["curve-torsor-axioms"].passed
