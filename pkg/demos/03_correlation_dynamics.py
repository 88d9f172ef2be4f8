"""
Entanglement, coherence, uncertainty and entropy over time
==========================================================

Run the Delta_Q sweep with lam = 0.1 and K_z = 5 and look at the
Delta_Q = 2 curve: negativity dies and revives around the sinc zeros while
entropic uncertainty and entropy move the other way.
"""

# %%
import numpy as np

from spinchannel.sweep import preset_spec, run_timeseries

spec = preset_spec("fig1")
data = run_timeseries(spec)
t = spec.times()


def column(value, name):
    return np.array([getattr(r, name) for v, r in data.rows if v == value])


ng, eu, lc, en = (column(2.0, m) for m in ("NG", "EU", "LC", "EN"))
print(f"t=0: NG={ng[0]:.3f} LC={lc[0]:.3f} EU={eu[0]:.3f} EN={en[0]:.3f}")

# %%
# Intervals on which the state is separable.
dead = ng == 0
edges = np.flatnonzero(np.diff(dead.astype(int)))
for a, b in zip(edges[::2], edges[1::2]):
    print(f"NG = 0 on t in [{t[a + 1]:.2f}, {t[b]:.2f}]")

# %%
print("corr(NG, EN) =", round(np.corrcoef(ng, en)[0, 1], 3))
print("corr(LC, EU) =", round(np.corrcoef(lc, eu)[0, 1], 3))

# %%
# Larger disorder kills correlations faster.
for value in spec.values:
    print(f"Delta_Q={value:g}: mean NG over the window = {column(value, 'NG').mean():.3f}")
