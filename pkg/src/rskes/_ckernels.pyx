# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops. Same signatures and results as ``_pykernels``."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset, memcpy

MODE_I = 1
MODE_FUSED = 2

BACKEND = "cython"


cdef inline int gmul(const int* exp, const int* log, int a, int b) noexcept nogil:
    if a == 0 or b == 0:
        return 0
    return exp[log[a] + log[b]]


def eval_many(f, p, points):
    cdef const int[::1] exp = f.exp_arr
    cdef const int[::1] log = f.log_arr
    cdef Py_ssize_t n = len(p), j, i
    cdef int* c = <int*> malloc((n + 1) * sizeof(int))
    cdef int acc, lx, x
    out = []
    try:
        for i in range(n):
            c[i] = p[i]
        for x in points:
            if x == 0:
                out.append(c[0] if n else 0)
                continue
            lx = log[x]
            acc = 0
            for i in range(n - 1, -1, -1):
                if acc:
                    acc = exp[log[acc] + lx]
                acc ^= c[i]
            out.append(acc)
    finally:
        free(c)
    return out


def roots_among(f, p, points):
    return [j for j, v in enumerate(eval_many(f, p, points)) if v == 0]


def kes_run(f, int mode, int t, S, psi):
    cdef const int[::1] exp_mv = f.exp_arr
    cdef const int[::1] log_mv = f.log_arr
    cdef const int* exp = &exp_mv[0]
    cdef const int* log = &log_mv[0]
    cdef int L = 2 * t + 1
    cdef int top = 2 * t
    cdef Py_ssize_t nq = len(psi)
    cdef Py_ssize_t head = 0
    cdef int* buf = <int*> malloc((8 * L + nq + 1) * sizeof(int))
    cdef int* U = buf
    cdef int* V = buf + L
    cdef int* W = buf + 2 * L
    cdef int* X = buf + 3 * L
    cdef int* nV = buf + 4 * L
    cdef int* nX = buf + 5 * L
    cdef int* zV = buf + 6 * L
    cdef int* zX = buf + 7 * L
    cdef int* queue = buf + 8 * L
    cdef int* tmp
    cdef int i, it, delta, a, b, gamma, xi, lg, lx, acc, acc2
    cdef int iterations = 0
    cdef bint first, swap
    cdef const int* A
    cdef const int* B
    if buf == NULL:
        raise MemoryError()
    try:
        memset(buf, 0, (8 * L + nq + 1) * sizeof(int))
        U[top] = 1
        for i in range(min(len(S), top)):
            V[i] = S[i]
        X[0] = 1
        for i in range(nq):
            queue[i] = psi[i]

        if mode == MODE_I:
            delta = 0
            with nogil:
                for it in range(top):
                    for i in range(top, 0, -1):
                        V[i] = V[i - 1]
                        X[i] = X[i - 1]
                    V[0] = 0
                    X[0] = 0
                    delta -= 1
                    if V[top] != 0 and delta < 0:
                        delta = -delta
                        tmp = U; U = V; V = tmp
                        tmp = W; W = X; X = tmp
                    a = U[top]
                    b = V[top]
                    for i in range(L):
                        nV[i] = gmul(exp, log, a, V[i]) ^ gmul(exp, log, b, U[i])
                        nX[i] = gmul(exp, log, a, X[i]) ^ gmul(exp, log, b, W[i])
                    tmp = V; V = nV; nV = tmp
                    tmp = X; X = nX; nX = tmp
                    iterations += 1
            return ([X[i] for i in range(L)], [V[i] for i in range(L)], delta, False, iterations)

        delta = -1
        with nogil:
            for it in range(top):
                first = head < nq and queue[head] != 0
                if first:
                    gamma = queue[head]
                    xi = 1
                    swap = False
                    A = V
                    B = X
                else:
                    gamma = U[top]
                    xi = V[top - 1]
                    swap = xi != 0 and delta < 0
                    A = U
                    B = W
                if head < nq:
                    head += 1
                zV[0] = 0
                zX[0] = 0
                for i in range(1, L):
                    zV[i] = V[i - 1]
                    zX[i] = X[i - 1]
                for i in range(L):
                    nV[i] = gmul(exp, log, gamma, zV[i]) ^ gmul(exp, log, xi, A[i])
                    nX[i] = gmul(exp, log, gamma, zX[i]) ^ gmul(exp, log, xi, B[i])
                if first:
                    nV[top] = 0
                elif swap:
                    memcpy(U, zV, L * sizeof(int))
                    memcpy(W, zX, L * sizeof(int))
                    delta = -delta - 1
                else:
                    delta -= 1
                tmp = V; V = nV; nV = tmp
                tmp = X; X = nX; nX = tmp
                iterations += 1
        psi_head_nonzero = head < nq and queue[head] != 0
        return ([X[i] for i in range(L)], [V[i] for i in range(L)], delta, psi_head_nonzero, iterations)
    finally:
        free(buf)
