from esdmem import validation


def test_all_suites_pass_on_fresh_build():
    report = validation.run_validation(seed=0)
    assert [name for name, _, _ in report] == list(validation.SUITES)
    failed = [(name, detail) for name, ok, detail in report if not ok]
    assert not failed


def test_crashing_suite_counts_as_failure(monkeypatch):
    def boom(rng, closed_form):
        raise RuntimeError("broken")

    monkeypatch.setitem(validation.SUITES, "infrastructure", boom)
    (name, ok, detail), = validation.run_validation(suites=["infrastructure"])
    assert name == "infrastructure" and not ok and "RuntimeError" in detail


def test_corrupted_formula_is_caught():
    from esdmem import codes

    def off_by_a_little(code, kind, q, p):
        return codes.closed_form_fidelity(code, kind, q, p) * (1 + 1e-6)

    report = validation.run_validation(closed_form=off_by_a_little, suites=["dfs4_depolarizing_fidelity", "ns3_dephasing_fidelity"])
    assert [ok for _, ok, _ in report] == [False, False]
