"""Pure-Python transform kernel.

The compiled twin lives in _kernels_cy.pyx; both must stay
behaviourally identical (the test suite and the benchmark compare
them).
"""


def rmf_apply(values, p, n, r1_flat):
    """Apply the basic p x p matrix along every axis of a p**n vector.

    ``values`` holds ints in 0..p-1 in row-major order, first axis most
    significant; ``r1_flat`` is the basic matrix, row-major, length
    p*p.  Returns a new list reduced mod p.  The basic matrix is lower
    triangular, so each output entry only sums up to its own row index.
    """
    out = list(values)
    size = len(out)
    sub = [0] * p
    for axis in range(n):
        stride = p ** (n - 1 - axis)
        block = stride * p
        for base in range(0, size, block):
            for off in range(stride):
                lo = base + off
                for j in range(p):
                    sub[j] = out[lo + j * stride]
                for r in range(p):
                    acc = 0
                    row = r * p
                    for c in range(r + 1):
                        acc += r1_flat[row + c] * sub[c]
                    out[lo + r * stride] = acc % p
    return out
