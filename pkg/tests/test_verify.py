from cyclicavg.verify import run_verify


def test_all_scopes_pass_and_are_deterministic():
    text1, ok1 = run_verify("all", 3)
    text2, ok2 = run_verify("all", 3)
    assert ok1 and ok2
    assert text1 == text2
    assert "0 failures" in text1


def test_scopes_are_subsets():
    text, ok = run_verify("solid", 11)
    assert ok
    assert "-- solid" in text and "-- polygon" not in text
