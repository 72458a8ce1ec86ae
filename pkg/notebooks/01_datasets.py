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
# # Trajectory datasets
#
# `ghostsim` works on recorded vehicle trajectories: one row per vehicle per
# sample with an id, road, timestamp, longitudinal position `x`, lateral
# position `y`, lane and speed. Without access to recorded highway data we use
# the synthetic generator, which drives IDM platoons lane by lane and samples
# them at 10 Hz.

# %%
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

import ghostsim as gs
from ghostsim.synthgen import equilibrium_spacing

OUT = Path("out")
OUT.mkdir(exist_ok=True)

# %% [markdown]
# ## Presets
#
# Two presets ship with the package. `freeflow` has sparse platoons cruising
# near the desired speed; `wave` packs the westbound lanes tightly and briefly
# brakes one vehicle per lane, which sets off a stop-and-go wave.

# %%
for name in ("freeflow", "wave"):
    cfg = gs.preset(name)
    print(f"{name:9s} road={cfg.road} lanes={cfg.lanes_used} n/lane={cfg.n_vehicles} "
          f"spacing={cfg.initial_spacing} speed={cfg.initial_speed} duration={cfg.duration}s")

wave = gs.generate(gs.preset("wave"))
print(len(wave), "records,", len(wave.vehicle_ids()), "vehicles, span", wave.t_span)

# %% [markdown]
# The wave preset's spacing matches the IDM equilibrium at 20 m/s for the
# longest vehicles, so shorter vehicles start with slack and the platoon is
# close to steady until the braking event.

# %%
params = gs.IdmParams()
print("equilibrium spacing at 20 m/s:", round(equilibrium_spacing(20.0, params), 2), "m")

# %% [markdown]
# ## CSV round trip
#
# Datasets export to and load from CSV. Loading validates every row and
# reports the offending line number on failure.

# %%
path = OUT / "wave.csv"
gs.export_dataset(wave, path)
again = gs.load_dataset(path)
print("round trip records:", len(again), "==", len(wave))

bad = OUT / "bad.csv"
bad.write_text(path.read_text().splitlines()[0] + "\nW1-000,Westbound,1669812350.0,oops,0,-1,20\n")
try:
    gs.load_dataset(bad)
except gs.DatasetError as e:
    print("rejected:", e)

# %% [markdown]
# ## Interpolation and window queries
#
# Between samples a vehicle's state is linearly interpolated. `query_interval`
# returns every vehicle of a road inside `[x_lo, x_hi]` at a given instant,
# which is what the simulator uses to fill its ghost bands.

# %%
t = wave.t_span[0] + 12.34
s = gs.interpolate_state(wave, "W1-030", t)
print(s)

around = gs.query_interval(wave, "Westbound", t, s.x - 100, s.x + 100)
print(len(around), "vehicles within 100 m; lanes:", sorted({v.lane for v in around}))

ego = gs.find_closest_vehicle(wave, "Westbound", -1, 700.0, wave.t_span[0] + 30)
print("closest record to x=700 m, t0+30 s in lane -1:", ego.id, round(ego.x, 1), round(ego.t - wave.t_span[0], 1))

# %% [markdown]
# ## Trajectories in lane -1
#
# Every fifth vehicle in the perturbed lane. The braking near t = 10 s
# propagates backwards through the platoon.

# %%
fig, ax = plt.subplots(figsize=(8, 5))
t0 = wave.t_span[0]
for vid in wave.vehicle_ids("Westbound")[::5]:
    if not vid.startswith("W1"):
        continue
    tr = wave.trajectory(vid)
    ax.scatter(tr["t"] - t0, tr["x"], c=tr["vel"], s=1, cmap="RdYlGn", vmin=0, vmax=30)
ax.set_xlabel("time [s]")
ax.set_ylabel("x [m]")
ax.set_title("wave preset, lane -1")
fig.savefig(OUT / "lane1_trajectories.png", dpi=100)
