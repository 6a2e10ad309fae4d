"""Pure-Python hot loops: batch evaluation and whole-run key-equation solving.

Mirrors ``_ckernels.pyx`` function for function. Polynomials are lists of
ints, ascending powers; ``f`` is a :class:`rskes.gf.GF`.
"""

MODE_I = 1
MODE_FUSED = 2  # Algorithm I* when psi is empty, Algorithm II otherwise

BACKEND = "python"


def eval_many(f, p, points):
    """``[p(x) for x in points]`` by Horner's rule."""
    exp, log = f.exp, f.log
    coeffs = list(reversed(p))
    out = []
    for x in points:
        if x == 0:
            out.append(p[0] if p else 0)
            continue
        lx = log[x]
        acc = 0
        for c in coeffs:
            acc = (exp[log[acc] + lx] if acc else 0) ^ c
        out.append(acc)
    return out


def roots_among(f, p, points):
    """Indices ``j`` with ``p(points[j]) == 0``."""
    return [j for j, v in enumerate(eval_many(f, p, points)) if v == 0]


def kes_run(f, mode, t, S, psi):
    """Run 2t iterations of Algorithm I (``MODE_I``) or the fused update.

    Returns ``(X, V, delta, psi_head_nonzero, iterations)`` with X and V as
    (2t+1)-slot lists.
    """
    exp, log = f.exp, f.log
    L = 2 * t + 1
    top = 2 * t
    U = [0] * L
    U[top] = 1
    V = [0] * L
    for i, s in enumerate(S[:top]):
        V[i] = s
    W = [0] * L
    X = [0] * L
    X[0] = 1
    queue = list(psi)
    head = 0
    iterations = 0

    if mode == MODE_I:
        delta = 0
        for _ in range(top):
            V = [0] + V[:top]
            X = [0] + X[:top]
            delta -= 1
            if V[top] and delta < 0:
                delta = -delta
                U, V = V, U
                W, X = X, W
            a = U[top]
            b = V[top]
            la = log[a] if a else -1
            lb = log[b] if b else -1
            nV = [0] * L
            nX = [0] * L
            for i in range(L):
                acc = 0
                if la >= 0:
                    if V[i]:
                        acc = exp[la + log[V[i]]]
                    xv = X[i]
                    nX[i] = exp[la + log[xv]] if xv else 0
                if lb >= 0:
                    if U[i]:
                        acc ^= exp[lb + log[U[i]]]
                    if W[i]:
                        nX[i] ^= exp[lb + log[W[i]]]
                nV[i] = acc
            V, X = nV, nX
            iterations += 1
        return X, V, delta, False, iterations

    delta = -1
    for _ in range(top):
        first = head < len(queue) and queue[head] != 0
        if first:
            gamma = queue[head]
            xi = 1
            swap = False
            A, B = V, X  # xi multiplies V, X themselves
        else:
            gamma = U[top]
            xi = V[top - 1]
            swap = xi != 0 and delta < 0
            A, B = U, W
        if head < len(queue):
            head += 1
        lg = log[gamma] if gamma else -1
        lx = log[xi] if xi else -1
        zV = [0] + V[:top]
        zX = [0] + X[:top]
        nV = [0] * L
        nX = [0] * L
        for i in range(L):
            acc = 0
            acc2 = 0
            if lg >= 0:
                if zV[i]:
                    acc = exp[lg + log[zV[i]]]
                if zX[i]:
                    acc2 = exp[lg + log[zX[i]]]
            if lx >= 0:
                if A[i]:
                    acc ^= exp[lx + log[A[i]]]
                if B[i]:
                    acc2 ^= exp[lx + log[B[i]]]
            nV[i] = acc
            nX[i] = acc2
        if first:
            nV[top] = 0  # erasure phase computes the modified syndrome mod z^2t
        elif swap:
            U, W = zV, zX
            delta = -delta - 1
        else:
            delta -= 1
        V, X = nV, nX
        iterations += 1
    psi_head_nonzero = head < len(queue) and queue[head] != 0
    return X, V, delta, psi_head_nonzero, iterations
