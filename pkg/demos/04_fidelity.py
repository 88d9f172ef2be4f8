"""
Fidelity to the initial thermal state and to a Bell state
=========================================================

The closed forms are checked against the generic two-matrix functional
applied to explicitly dephased states.
"""

# %%
import numpy as np

from spinchannel import ChannelParams, SpinParams, fidelity_pair, fidelity_to_bell, fidelity_to_initial
from spinchannel import static_average, thermal_state
from spinchannel.measures import bell_state_matrix

p = SpinParams(J=1, delta_z=1, D_z=1, K_z=5, B=1, T=0.5)
t = np.linspace(0, 30, 7)
for delta_q in (1.0, 3.0, 5.0):
    c = ChannelParams(lam=0.1, Delta_Q=delta_q)
    rho_t = static_average(thermal_state(p), c, t).to_matrix()
    f1 = fidelity_to_initial(p, c, t)
    f2 = fidelity_to_bell(p, c, t)
    gap1 = np.abs(f1 - fidelity_pair(rho_t, thermal_state(p).to_matrix()[None])).max()
    gap2 = np.abs(f2 - fidelity_pair(rho_t, bell_state_matrix()[None])).max()
    print(f"Delta_Q={delta_q:g}")
    print("  FID1:", np.round(f1, 4), f"(two-path gap {gap1:.1e})")
    print("  FID2:", np.round(f2, 4), f"(two-path gap {gap2:.1e})")
