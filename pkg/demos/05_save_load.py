"""Binary matrix serialization: the QSIM format round-trips bit for bit.

Run with: python3 demos/05_save_load.py
"""

import tempfile
from pathlib import Path

from quditsim import default_rng, load, norm, rand_rho, save

rho = rand_rho(16, default_rng(0))

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "rho.qsim"
    save(rho, path)
    size = path.stat().st_size
    loaded = load(path)

print("wrote a random 16x16 density matrix")
print("record size:", size, "bytes (21-byte header + 16 bytes per entry)")
print("norm difference after loading:", norm(rho - loaded))
print("bitwise identical:", (rho == loaded).all())
