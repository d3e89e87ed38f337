"""Partitions, centralizer orders, and symmetric-group character tables."""

import math

from gwhurwitz import (CharacterTable, enumerate_partitions, f2_shifted,
                       format_partition, z_factor)

d = 5
parts = enumerate_partitions(d)
print(f"The {len(parts)} partitions of {d} in canonical order:")
print("  ", ", ".join(format_partition(p) for p in parts))

print("\nCentralizer orders z(mu) = Aut(mu) * prod(parts):")
for mu in parts:
    print(f"  z{format_partition(mu)} = {z_factor(mu)}")

table = CharacterTable.build(d)
print(f"\nCharacter table of the degree-{d} symmetric group (rows = shapes):")
for lam in table.partitions:
    row = " ".join(f"{table.chi(lam, mu):>3}" for mu in table.partitions)
    print(f"  {format_partition(lam):>12}  {row}")

print("\nColumn orthogonality against the identity class:")
total = sum(table.dim(lam) ** 2 for lam in table.partitions)
print(f"  sum of squared dimensions = {total} = {d}! is",
      total == math.factorial(d))

print("\nTransposition eigenvalues from shifted coordinates (no characters):")
for lam in table.partitions:
    print(f"  f2{format_partition(lam)} = {f2_shifted(lam)}")
