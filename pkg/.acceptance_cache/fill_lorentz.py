"""Populate the acceptance cache with the two Lorentz feedforward models,
trained through the real fit_single_step with the exact acceptance config."""
import json, time
from aether.train import TrainConfig, fit_single_step, load_trajectories

DATA = ".acceptance_cache/data"
train = load_trajectories(f"{DATA}/lorentz_train.aeth")
val = load_trajectories(f"{DATA}/lorentz_val.aeth")

for name, mode in [("lorentz_plain", "plain"), ("lorentz_field", "sequential")]:
    path = f".acceptance_cache/models/{name}_e30.aetc"
    cfg = TrainConfig(model={"d": 3, "hidden_dim": 64, "n_layers": 4,
                             "mode": mode},
                      model_kind="feedforward", epochs=30, batch_size=32,
                      learning_rate=1e-3, seed=0, checkpoint_path=path)
    t0 = time.time()
    model, rows = fit_single_step(cfg, train, val)
    vals = [r["val_mse"] for r in rows if r["step"] == -1]
    print(json.dumps({"name": name, "s": round(time.time() - t0, 1),
                      "val_best": min(vals)}), flush=True)
