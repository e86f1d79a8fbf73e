"""
Reusable UI components for the itemset miner.
"""
import tkinter as tk
from tkinter import ttk, filedialog
from tkinter.scrolledtext import ScrolledText
from typing import Callable, Optional, Sequence

from mining import MiningProgress


class FileSelector(ttk.Frame):
    """Context file picker; on_change receives the path of every file chosen."""

    FIMI_TYPES = [("FIMI", "*.dat *.txt"), ("Todos", "*.*")]

    def __init__(
        self,
        parent,
        label: str = "Contexto:",
        on_change: Optional[Callable[[str], None]] = None,
        **kwargs
    ):
        super().__init__(parent, **kwargs)
        self.on_change = on_change
        self.path_var = tk.StringVar()

        ttk.Label(self, text=label).grid(row=0, column=0, sticky="w", padx=(0, 8))
        self.entry = ttk.Entry(self, textvariable=self.path_var)
        self.entry.grid(row=0, column=1, sticky="ew")
        self.button = ttk.Button(self, text="📂", width=3, command=self._browse)
        self.button.grid(row=0, column=2, padx=(6, 0))
        self.columnconfigure(1, weight=1)

    def _browse(self):
        path = filedialog.askopenfilename(title="Contexto FIMI", filetypes=self.FIMI_TYPES)
        if path:
            self.set(path)

    def get(self) -> Optional[str]:
        return self.path_var.get().strip() or None

    def set(self, value: str):
        self.path_var.set(value)
        path = self.get()
        if path and self.on_change:
            self.on_change(path)

    def set_state(self, state: str):
        for widget in (self.entry, self.button):
            widget.configure(state=state)


class ThresholdInput(ttk.Frame):
    """minsupp and minconf entries side by side."""

    def __init__(self, parent, minsupp: str = "2", minconf: str = "0.5", **kwargs):
        super().__init__(parent, **kwargs)

        self.minsupp_var = tk.StringVar(value=minsupp)
        self.minconf_var = tk.StringVar(value=minconf)
        self.shortcut_var = tk.BooleanVar(value=False)

        ttk.Label(self, text="minsupp (n o P%):").pack(side="left")
        self.minsupp_entry = ttk.Entry(self, textvariable=self.minsupp_var, width=8)
        self.minsupp_entry.pack(side="left", padx=(6, 16))

        ttk.Label(self, text="minconf:").pack(side="left")
        self.minconf_entry = ttk.Entry(self, textvariable=self.minconf_var, width=8)
        self.minconf_entry.pack(side="left", padx=(6, 16))

        self.shortcut_check = ttk.Checkbutton(
            self,
            text="Niveles cerrados sin comparaciones",
            variable=self.shortcut_var
        )
        self.shortcut_check.pack(side="left")

    def get(self) -> tuple[str, str]:
        return self.minsupp_var.get().strip(), self.minconf_var.get().strip()

    def use_shortcut(self) -> bool:
        return self.shortcut_var.get()

    def set_state(self, state: str):
        for widget in (self.minsupp_entry, self.minconf_entry, self.shortcut_check):
            widget.configure(state=state)


class ProgressPanel(ttk.Frame):
    """Overall progress bar plus one marker per pipeline stage."""

    MARKS = {"pending": "○", "running": "▶", "finished": "✔", "error": "✖"}

    def __init__(self, parent, stages: Sequence[str] = (), **kwargs):
        super().__init__(parent, **kwargs)
        self.stages = list(stages)
        self.progress_var = tk.DoubleVar(value=0)
        self.status_var = tk.StringVar()

        ttk.Progressbar(self, variable=self.progress_var, maximum=100).pack(fill="x")

        row = ttk.Frame(self)
        row.pack(fill="x", pady=(6, 0))
        self.stage_vars = {name: tk.StringVar() for name in self.stages}
        for name in self.stages:
            ttk.Label(row, textvariable=self.stage_vars[name]).pack(side="left", padx=(0, 14))
        ttk.Label(row, textvariable=self.status_var, foreground="#555").pack(side="right")

        self.reset()

    def _mark(self, name: str, state: str):
        self.stage_vars[name].set(f"{self.MARKS[state]} {name}")

    def show(self, progress: MiningProgress):
        if progress.status != "error":
            self.progress_var.set(max(0.0, min(100.0, progress.percent)))
        self.status_var.set(f"[{progress.stage}] {progress.message}" if progress.stage else progress.message)
        if progress.stage not in self.stage_vars:
            if progress.status == "finished":
                for name in self.stages:
                    self._mark(name, "finished")
            return
        current = self.stages.index(progress.stage)
        for name in self.stages[:current]:
            self._mark(name, "finished")
        self._mark(progress.stage, "running" if progress.status == "running" else progress.status)

    def reset(self):
        self.progress_var.set(0)
        self.status_var.set("Listo.")
        for name in self.stages:
            self._mark(name, "pending")

    def marker(self, name: str) -> str:
        return self.stage_vars[name].get()


class LogPanel(ttk.Frame):
    """Read-only results pane; lines can carry an "ok" or "error" tag."""

    def __init__(self, parent, label: str = "Log:", height: int = 8, **kwargs):
        super().__init__(parent, **kwargs)
        ttk.Label(self, text=label).pack(anchor="w")
        self.text = ScrolledText(self, height=height, wrap="none", state="disabled")
        self.text.pack(fill="both", expand=True, pady=(6, 0))
        self.text.tag_configure("ok", foreground="#2e7d32")
        self.text.tag_configure("error", foreground="#c62828")

    def _write(self, action: Callable[[], None]):
        self.text.configure(state="normal")
        action()
        self.text.configure(state="disabled")

    def log(self, message: str, tag: Optional[str] = None):
        self._write(lambda: self.text.insert("end", message + "\n", tag or ()))
        self.text.see("end")

    def contents(self) -> str:
        return self.text.get("1.0", "end-1c")

    def clear(self):
        self._write(lambda: self.text.delete("1.0", "end"))
