from tvs.figures import render_sweep_figure


def make_rows(verified=True):
    return [
        {"n": n, "formula": k, "bound": k, "constructed": k, "verified": verified}
        for n, k in ((3, 2), (4, 2), (5, 2), (6, 3), (7, 3))
    ]


def test_renders_png(tmp_path):
    path = render_sweep_figure(make_rows(), "wheel", tmp_path)
    assert path == tmp_path / "sweep_wheel.png"
    assert path.stat().st_size > 0


def test_family_name_is_filename_safe(tmp_path):
    path = render_sweep_figure(make_rows(), "two-regular", tmp_path)
    assert path.name == "sweep_two_regular.png"


def test_failed_rows_still_render(tmp_path):
    rows = make_rows() + [
        {"n": 8, "formula": 3, "bound": 3, "constructed": 4, "verified": False}
    ]
    path = render_sweep_figure(rows, "wheel", tmp_path)
    assert path.exists()


def test_creates_missing_directory(tmp_path):
    target = tmp_path / "a" / "b"
    path = render_sweep_figure(make_rows(), "helm", target)
    assert path.parent == target and path.exists()
