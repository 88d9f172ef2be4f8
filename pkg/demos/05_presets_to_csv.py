"""
Writing every figure preset to disk
===================================

Equivalent to ``spinchannel --preset <id> --out <id>.csv`` for each preset.
Pass a directory as the first argument (default: ./preset_data).
"""

# %%
import pathlib
import sys
import time

from spinchannel.sweep import PRESETS, emit_table, run_preset

out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "preset_data")
out.mkdir(parents=True, exist_ok=True)

for name in PRESETS:
    start = time.perf_counter()
    data = run_preset(name)
    emit_table(data, "csv", str(out / f"{name}.csv"))
    print(f"{name:7s} {len(data.rows):6d} rows  {time.perf_counter() - start:.2f} s  ({data.metadata['note']})")
