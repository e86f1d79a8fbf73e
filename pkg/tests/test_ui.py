from fractions import Fraction

import pytest

tk = pytest.importorskip("tkinter")

from mining import MiningProgress  # noqa: E402


@pytest.fixture
def root():
    try:
        window = tk.Tk()
    except tk.TclError:
        pytest.skip("no display available")
    window.withdraw()
    yield window
    window.destroy()


def test_threshold_input(root):
    from ui.components import ThresholdInput

    widget = ThresholdInput(root, minsupp="40%", minconf="1/2")
    assert widget.get() == ("40%", "1/2")
    assert Fraction(widget.get()[1]) == Fraction(1, 2)
    assert widget.use_shortcut() is False
    widget.set_state("disabled")


def test_progress_panel_shows_stage(root):
    from ui.components import ProgressPanel

    panel = ProgressPanel(root, stages=["generators", "order", "rules"])
    assert panel.marker("order") == "○ order"
    panel.show(MiningProgress(percent=55.0, stage="order", status="running", message="support 3 placed"))
    assert panel.progress_var.get() == 55.0
    assert panel.status_var.get() == "[order] support 3 placed"
    assert panel.marker("generators") == "✔ generators"
    assert panel.marker("order") == "▶ order"
    assert panel.marker("rules") == "○ rules"

    panel.show(MiningProgress(stage="rules", status="error", message="Error: boom"))
    assert panel.progress_var.get() == 55.0
    assert panel.marker("rules") == "✖ rules"

    panel.show(MiningProgress(percent=100.0, stage="done", status="finished", message="classes=6"))
    assert panel.marker("rules") == "✔ rules"
    panel.reset()
    assert panel.progress_var.get() == 0
    assert panel.marker("generators") == "○ generators"


def test_log_panel(root):
    from ui.components import LogPanel

    panel = LogPanel(root)
    panel.log("first")
    panel.log("second", tag="error")
    assert "error" in panel.text.tag_names("2.0")
    assert panel.contents() == "first\nsecond\n"
    panel.clear()
    assert panel.contents() == ""


def test_file_selector(root):
    from ui.components import FileSelector

    chosen = []
    selector = FileSelector(root, on_change=chosen.append)
    assert selector.get() is None
    selector.set("  data/example.dat ")
    assert selector.get() == "data/example.dat"
    assert chosen == ["data/example.dat"]
    selector.set("")
    assert chosen == ["data/example.dat"]
