"""
Main application window.
"""
import threading
import tkinter as tk
from pathlib import Path
from tkinter import ttk, messagebox, filedialog
from typing import Optional

from .components import (
    FileSelector,
    ThresholdInput,
    ProgressPanel,
    LogPanel,
)
from cli.document import build_document, rules_text, to_dot, to_json
from mining import (
    MiningConfig,
    MiningError,
    MiningManager,
    MiningParams,
    MiningProgress,
    MiningRun,
    describe,
    parse_context,
    parse_minconf,
    parse_minsupp,
)


class MainWindow(tk.Tk):
    """Main application window for the itemset miner."""

    APP_TITLE = "Lattice Miner"
    DEFAULT_SIZE = "820x560"
    MIN_SIZE = (720, 480)

    def __init__(self):
        super().__init__()

        self.title(self.APP_TITLE)
        self.geometry(self.DEFAULT_SIZE)
        self.minsize(*self.MIN_SIZE)

        self._mining = False
        self._last_run: Optional[MiningRun] = None

        self._build_ui()
        self._apply_theme()

    def _build_ui(self):
        """Build the user interface."""
        pad = {"padx": 12, "pady": 8}

        main = ttk.Frame(self)
        main.pack(fill="both", expand=True)

        header = ttk.Frame(main)
        header.pack(fill="x", **pad)
        ttk.Label(
            header,
            text="Motivos cerrados, generadores mínimos y reglas genéricas",
            font=("TkDefaultFont", 13, "bold")
        ).pack(side="left")
        ttk.Label(
            header,
            text=" → ".join(MiningManager.get_stage_names()),
            foreground="#666"
        ).pack(side="right")

        self.file_selector = FileSelector(main, label="Contexto (FIMI):", on_change=self._preview_context)
        self.file_selector.pack(fill="x", **pad)

        self.threshold_input = ThresholdInput(main)
        self.threshold_input.pack(fill="x", **pad)

        btn_frame = ttk.Frame(main)
        btn_frame.pack(fill="x", **pad)

        self.btn_mine = ttk.Button(btn_frame, text="▶ Minar", command=self._start_mining)
        self.btn_mine.pack(side="left")

        self.btn_export = ttk.Button(
            btn_frame,
            text="💾 Exportar…",
            command=self._export,
            state="disabled"
        )
        self.btn_export.pack(side="left", padx=(8, 0))

        self.btn_clear_log = ttk.Button(
            btn_frame,
            text="🗑 Limpiar log",
            command=lambda: self.log_panel.clear()
        )
        self.btn_clear_log.pack(side="right")

        self.progress_panel = ProgressPanel(main, stages=MiningManager.get_stage_names())
        self.progress_panel.pack(fill="x", **pad)

        self.log_panel = LogPanel(main, label="Resultados:", height=12)
        self.log_panel.pack(fill="both", expand=True, **pad)

    def _apply_theme(self):
        """Apply visual theme."""
        try:
            style = ttk.Style()
            if "clam" in style.theme_names():
                style.theme_use("clam")
        except tk.TclError:
            pass

    def _set_busy(self, busy: bool):
        """Enable/disable UI while mining."""
        self._mining = busy
        state = "disabled" if busy else "normal"

        self.file_selector.set_state(state)
        self.threshold_input.set_state(state)
        self.btn_mine.configure(state=state)
        self.btn_export.configure(state="disabled" if busy or self._last_run is None else "normal")

    def _handle_progress(self, progress: MiningProgress):
        """Handle progress updates from the stages (called from worker thread)."""
        def update():
            self.progress_panel.show(progress)
            if progress.status == "error":
                self.log_panel.log(f"❌ {progress.message}", tag="error")
            elif progress.status == "finished":
                self.log_panel.log(f"✅ {progress.message}", tag="ok")

        self.after(0, update)

    def _preview_context(self, path: str):
        """Log the characteristics of a freshly selected context."""
        try:
            stats = describe(parse_context(Path(path).read_bytes(), name=Path(path).stem))
        except (OSError, MiningError) as e:
            self.log_panel.log(f"⚠ {path}: {e}", tag="error")
            return
        self.log_panel.log(
            f"📄 {stats.name}: {stats.objects} objetos, {stats.items} items, "
            f"densidad {stats.density:.3f}"
        )

    def _read_inputs(self) -> Optional[tuple]:
        path = self.file_selector.get()
        if not path:
            messagebox.showerror("Error", "Selecciona un archivo de contexto.")
            return None

        try:
            ctx = parse_context(Path(path).read_bytes(), name=Path(path).stem)
            minsupp, minconf = self.threshold_input.get()
            params = MiningParams(parse_minsupp(minsupp, ctx.n_objects), parse_minconf(minconf))
        except OSError as e:
            messagebox.showerror("Error", f"No se puede leer el archivo:\n{e}")
            return None
        except MiningError as e:
            messagebox.showerror("Error", str(e))
            return None

        return ctx, MiningConfig(params, use_closed_level_shortcut=self.threshold_input.use_shortcut())

    def _start_mining(self):
        """Start a mining run."""
        inputs = self._read_inputs()
        if inputs is None:
            return
        ctx, config = inputs

        self.log_panel.log(f"📄 {ctx.name}: {ctx.n_objects} objetos, {ctx.n_items} items")
        self.log_panel.log(f"⚙ minsupp={config.params.minsupp_abs} minconf={config.params.minconf}")

        self._set_busy(True)
        self.progress_panel.reset()

        thread = threading.Thread(
            target=self._mining_worker,
            args=(ctx, config),
            daemon=True
        )
        thread.start()

    def _mining_worker(self, ctx, config: MiningConfig):
        """Worker thread for mining."""
        try:
            manager = MiningManager(progress_callback=self._handle_progress)
            run = manager.mine(ctx, config)
            self.after(0, lambda: self._show_run(run))

        except Exception as e:
            error_msg = str(e)
            self.after(0, lambda: messagebox.showerror(
                "Error de minería",
                f"No se pudo minar el contexto:\n\n{error_msg}"
            ))

        finally:
            self.after(0, lambda: self._set_busy(False))

    def _show_run(self, run: MiningRun):
        self._last_run = run
        for stage, ms in run.timings_ms.items():
            self.log_panel.log(f"⏱ {stage}: {ms:.1f} ms")
        self.log_panel.log("Reglas:")
        for line in rules_text(run.context, run.rules.all_rules).splitlines():
            self.log_panel.log(f"  {line}")

    def _export(self):
        """Save the last run as JSON, DOT or rule listing, chosen by extension."""
        if self._last_run is None:
            return
        path = filedialog.asksaveasfilename(
            title="Exportar resultado",
            defaultextension=".json",
            filetypes=[("Lattice JSON", "*.json"), ("Graphviz", "*.dot"), ("Reglas", "*.txt")]
        )
        if not path:
            return

        run = self._last_run
        suffix = Path(path).suffix.lower()
        if suffix == ".dot":
            text = to_dot(build_document(run))
        elif suffix == ".txt":
            text = rules_text(run.context, run.rules.all_rules)
        else:
            text = to_json(build_document(run))

        try:
            Path(path).write_text(text, encoding="utf-8")
            self.log_panel.log(f"💾 {path}")
        except OSError as e:
            messagebox.showerror("Error", f"No se pudo escribir el archivo:\n{e}")
