# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # Ghost-cell cosimulation
#
# One vehicle from the data becomes the ego. Vehicles within 150 m of it are
# simulated with the IDM; two 50 m ghost bands beyond that window are replayed
# from the data every step. A simulated vehicle that leaves the window becomes
# a ghost, and a ghost that enters the window is spawned as a simulated
# vehicle with its recorded speed.

# %%
from collections import Counter
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

import ghostsim as gs
from ghostsim.cosim import initialize

OUT = Path("out")
OUT.mkdir(exist_ok=True)

# %% [markdown]
# ## Window regions
#
# Boundary points belong to the visible window.

# %%
cfg = gs.SimConfig()
for x in (549.0, 550.0, 700.0, 850.0, 850.5, 900.0, 901.0):
    print(f"x={x:6.1f}  {gs.classify_region(700.0, x, cfg).value}")

# %% [markdown]
# ## Free flow
#
# On the free-flow preset the ego should stay close to its recorded
# trajectory: both follow the same car-following model with the same
# desired speed.

# %%
freeflow = gs.generate(gs.preset("freeflow"))
t_start = freeflow.t_span[0]
ff_cfg = gs.SimConfig(road="Eastbound", ego_lane=-2, ego_x=300.0, ego_t=t_start + 30,
                      vel_default=30.0, t_max=30.0)
ff_log = gs.run(freeflow, ff_cfg)
dev = gs.ego_deviation(ff_log, freeflow)
print("termination:", ff_log.termination, "steps:", ff_log.steps, "ego:", ff_log.ego_id)
print(f"rmse_x={dev.rmse_x:.3f} m  rmse_v={dev.rmse_v:.3f} m/s  max|dx|={dev.max_abs_x:.3f} m")

# %% [markdown]
# ## Inside a wave
#
# The wave preset drives a slowdown through the window. The ego is placed
# upstream of the braking event and its desired speed lowered to 21 m/s.

# %%
wave = gs.generate(gs.preset("wave"))
w_cfg = gs.SimConfig(road="Westbound", ego_lane=-1, ego_x=700.0, ego_t=wave.t_span[0] + 30,
                     vel_default=21.0, seed=7, t_max=30.0)
state = initialize(wave, w_cfg)
print("ego", state.ego.id, "visible", len(state.visible), "ghosts", len(state.ghost))

w_log = gs.run(wave, w_cfg)
t = np.array([e.t for e in w_log.entries]) - w_log.entries[0].t
v = np.array([e.ego.vel for e in w_log.entries])
print(f"ego speed: min {v.min():.2f} m/s at t={t[v.argmin()]:.1f} s, final {v[-1]:.2f} m/s")

# %% [markdown]
# ## Boundary traffic
#
# Spawns and deferrals per second of simulated time. A spawn is deferred
# while the incoming vehicle would overlap a simulated one.

# %%
spawns = Counter(int(t[i]) for i, e in enumerate(w_log.entries) for _ in e.spawned)
deferred = sum(len(e.deferred) for e in w_log.entries)
print("spawns:", sum(spawns.values()), "deferred step-events:", deferred)
counts = np.array([len(e.visible) + len(e.ghost) for e in w_log.entries])
print("vehicles around the ego: min", counts.min(), "max", counts.max())

# %%
fig, (a1, a2) = plt.subplots(2, 1, figsize=(8, 6), sharex=True)
ref = [gs.interpolate_state(wave, w_log.ego_id, e.t) for e in w_log.entries]
a1.plot(t, v, label="simulated ego")
a1.plot(t, [r.vel if r else np.nan for r in ref], "--", label="recorded")
a1.set_ylabel("speed [m/s]")
a1.legend()
a2.plot(t, counts)
a2.set_ylabel("visible + ghost")
a2.set_xlabel("time [s]")
fig.savefig(OUT / "wave_ego.png", dpi=100)

# %% [markdown]
# ## Lane changes
#
# With lane changes on, an agent moves to an adjacent lane when its IDM
# acceleration there is better by more than 0.2 m/s^2 and both new gaps are
# safe. Each agent is evaluated at most once per second, the ego included.

# %%
lc_log = gs.run(wave, gs.SimConfig(**{**w_cfg.to_dict(), "model": w_cfg.model, "lane_changes": True}))
lanes = Counter(e.ego.lane for e in lc_log.entries)
print("ego lane occupancy (steps):", dict(lanes))
print(f"ego min speed with lane changes: {min(e.ego.vel for e in lc_log.entries):.2f} m/s")

# %% [markdown]
# Logs export to CSV with one row per vehicle per step.

# %%
gs.export_log(w_log, OUT / "wave_log.csv")
print("log rows:", sum(1 for _ in open(OUT / "wave_log.csv")) - 1)
