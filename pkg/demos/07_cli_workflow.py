"""Command-line workflow: a config file, two runs, and a comparison.

Equivalent shell session:

    plate simulate --config run.cfg --out runs/a
    plate simulate --config run.cfg --out runs/b
    plate compare runs/a runs/b --tolerance 0
"""
from __future__ import annotations

import tempfile
from pathlib import Path

from dampedplate.cli import main

CONFIG = """\
grid.n = 1
grid.N = 128
grid.L = 20
time.dt = 0.01
time.T = 1
data.u0 = gaussian
data.u0_amplitude = 0.3
"""

with tempfile.TemporaryDirectory() as tmp:
    root = Path(tmp)
    cfg = root / "run.cfg"
    cfg.write_text(CONFIG)
    for name in ("a", "b"):
        print(f"simulate -> exit {main(['simulate', '--config', str(cfg), '--out', str(root / name)])}")
    print("artifacts:", sorted(p.name for p in (root / "a").iterdir()))
    print(f"compare -> exit {main(['compare', str(root / 'a'), str(root / 'b'), '--tolerance', '0'])}")
