#!/usr/bin/env python3
"""Build the quantum-vs-classical state count table.

Each row pins the constant quantum cost (2 or 3 basis states) against
the divisor-determined DFA size. dfa_certified flips to true when the
exhaustive below-size search fits the enumeration budget and confirms
the formula.
"""

import sys

from qfa_exact import (
    BinaryPromiseSpec,
    UnaryPromiseSpec,
    separation_table,
    write_separation_csv,
)

specs = (
    # doubling moduli: the classical cost doubles each row
    [UnaryPromiseSpec(2 ** (k + 1), 0, 2**k) for k in range(1, 5)]
    # prime moduli: the classical cost is the whole modulus
    + [UnaryPromiseSpec(N, 0, 1) for N in (3, 5, 7, 11, 13)]
    # fixed b-surplus: cost is the smallest non-divisor, never large
    + [BinaryPromiseSpec(l) for l in (1, 4, 6, 12)]
    # modular b-surplus: back to the divisor rule
    + [BinaryPromiseSpec(2, 5), BinaryPromiseSpec(5, 15), BinaryPromiseSpec(10, 13)]
)

rows = separation_table(specs)
write_separation_csv(rows, sys.stdout)

print(file=sys.stderr)
print("qfa_states stays at 2-3 while dfa_states tracks the modulus;", file=sys.stderr)
print("rerun through the CLI with:  qfa-exact table --specs <file>", file=sys.stderr)
