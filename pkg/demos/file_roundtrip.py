"""Write a catalog algebra to the JSON format, read it back, and check it."""

from __future__ import annotations

import tempfile
from pathlib import Path

from leibext import catalog, leibniz_check
from leibext.catalog.fileformat import read_algebra, serialize_algebra, write_algebra

table = catalog.get("L2_hat_4", delta=2).table
print(serialize_algebra(table))
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "l2hat4.json"
    write_algebra(table, path)
    again = read_algebra(path)
print("round trip exact:", again == table, "| Leibniz:", leibniz_check(again)[0])
