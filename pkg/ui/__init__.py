"""
UI module - graphical user interface components.
"""
from .main_window import MainWindow
from .components import (
    FileSelector,
    ThresholdInput,
    ProgressPanel,
    LogPanel,
)


__all__ = [
    "MainWindow",
    "FileSelector",
    "ThresholdInput",
    "ProgressPanel",
    "LogPanel",
]
