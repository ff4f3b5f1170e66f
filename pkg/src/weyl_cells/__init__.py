"""Extended affine Weyl groups, shifted dot actions, Kazhdan-Lusztig cells,
nilpotent-orbit partitions and fusion of affine vertex algebra modules."""

from __future__ import annotations

__version__ = "0.1.0"
