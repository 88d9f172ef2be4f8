"""
Dephasing by static noise
=========================

A qubit pair in a common classical field with a random but constant level
picks up a phase on its |00><11| coherence. Averaging the phase over a
uniform window of width Delta_Q gives a sinc envelope with exact zeros.
"""

# %%
import numpy as np
from scipy.integrate import simpson

from spinchannel import ChannelParams, SpinParams, evolve_state, static_average, thermal_state

s = thermal_state(SpinParams(J=1, delta_z=1, D_z=1, K_z=5, B=1, T=1))
c = ChannelParams(lam=0.1, Delta_Q=2.0, delta_o=1.0)

# %%
# Closed form against an explicit average over noise levels.
for t in (1.0, 5.0, 10.0):
    grid = np.linspace(c.delta_o - c.Delta_Q / 2, c.delta_o + c.Delta_Q / 2, 1001)
    quad = simpson(evolve_state(s, c, grid, t).r14, x=grid) / c.Delta_Q
    print(f"t={t:5.1f}  closed={static_average(s, c, t).r14:.10f}  quadrature={quad:.10f}")

# %%
# The coherence vanishes whenever 2 Delta_Q lam t is a multiple of pi.
zeros = np.pi * np.arange(1, 5) / (2 * c.Delta_Q * c.lam)
print("zeros at t =", zeros)
print("|r14| there:", np.abs(static_average(s, c, zeros).r14))
