"""chargraph: prime-divisor graphs of character degree sets.

Subpackages by capability:

- ``numtheory``: factorization, Zsigmondy primes, the p^f + 1 = r^m census,
  and prime-support classifications of 2^f +- 1.
- ``catalog``: bundled degree-set data for named simple groups plus
  formula-based degree sets for the PSL2 families.
- ``graphs`` / ``shapes``: the prime-divisor graph, its predicates, and an
  expression algebra of unions/joins of complete graphs.
- ``steinberg``: GF(2^f) arithmetic, SL2(2^f) enumeration, twisted tensor
  modules and exhaustive stabilizer searches.
- ``scanner``: batch enumeration over prime powers and the catalog.
- ``cli``: the ``cgk`` command-line front end.
"""

__version__ = "0.1.0"
