import pytest

from genrot.verify import EXPERIMENTAL, RHO_SCOPES, SCOPES, TOGGLE_SCOPES, run_sweep


@pytest.mark.parametrize("scope", RHO_SCOPES)
def test_rho_scopes_pass_small(scope):
    result = run_sweep(scope, range(1, 8), range(1, 4))
    assert result.passed, result.to_dict()
    assert result.checked > 0


@pytest.mark.parametrize("scope", [s for s in TOGGLE_SCOPES if s not in EXPERIMENTAL])
def test_toggle_scopes_pass_small(scope):
    result = run_sweep(scope, range(1, 11), range(1, 4))
    assert result.passed, result.to_dict()
    assert result.checked > 0


def test_z_sweep_is_experimental_and_fails_at_8():
    result = run_sweep("z-conjecture", [8], [3])
    assert result.experimental
    assert not result.passed
    words = {f.params["word"] for f in result.failures}
    assert "00000010" in words
    assert all(f.experimental for f in result.failures)


def test_z_sweep_holds_for_small_N():
    assert run_sweep("z-conjecture", range(1, 8), range(1, 4)).passed


def test_sizes_beyond_cap_are_refused_before_work():
    seen = []
    with pytest.raises(ValueError, match="cap"):
        run_sweep("theorem1", range(1, 26), [1], progress=seen.append)
    assert seen == []
    with pytest.raises(ValueError, match="cap"):
        run_sweep("snake", [31], [1])


def test_bad_arguments():
    with pytest.raises(ValueError, match="unknown scope"):
        run_sweep("nope", [3], [1])
    with pytest.raises(ValueError):
        run_sweep("theorem1", [], [1])
    with pytest.raises(ValueError):
        run_sweep("theorem1", [0], [1])


def test_m_above_size_is_skipped():
    result = run_sweep("theorem1", [2], [3])
    assert result.checked == 0 and result.passed


def test_progress_callback():
    seen = []
    run_sweep("census", [4, 5], [2], progress=seen.append)
    assert seen == ["census: size=4 m=2", "census: size=5 m=2"]


def test_scopes_are_disjoint():
    assert set(RHO_SCOPES).isdisjoint(TOGGLE_SCOPES)
    assert set(SCOPES) == set(RHO_SCOPES) | set(TOGGLE_SCOPES)
