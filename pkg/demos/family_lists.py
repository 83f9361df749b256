"""Compare the linear systems that define each family with the named lists.

Run with ``python demos/family_lists.py``.
"""
from terminal_divisors.families import (cax4_named, cd22_named, cd33_named, family_table,
                                        family_weights)
from terminal_divisors.lattice import format_weight

# For cAx/4 and cD/3-3 the systems and the named lists agree exactly.
for n in range(1, 6):
    same = family_weights("cAx/4", n) == sorted(cax4_named(n))
    print(f"cAx/4 n={n}: {len(cax4_named(n))} weights, systems agree: {same}")
print(f"cD/3-3: systems agree: {family_weights('cD/3-3') == sorted(cd33_named())}")

# For cD/2-2 the fourth item must be (1,k,1,k).  The variant (1,k,2,k) has
# discrepancy 2 against the z^{n-1} term and satisfies none of the systems.
n = 9
corrected, variant = cd22_named(n), cd22_named(n, printed_item4=True)
print(f"cD/2-2 n={n}: corrected list matches systems: "
      f"{family_weights('cD/2-2', n) == sorted(corrected)}")
only_variant = sorted(set(variant) - set(corrected))
print("weights only in the (1,k,2,k) variant:", ", ".join(format_weight(w) for w in only_variant))

# The family table adds discrepancy and genus bound to each row.
for row in family_table("cD/2-2", {"n": 6}):
    print(f"  {format_weight(row.weight):<14} {row.label or '-':<4} k={row.k} "
          f"a={row.discrepancy} bound={row.bound}")
