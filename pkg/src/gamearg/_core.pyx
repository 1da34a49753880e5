# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Same contract as ``_pure``."""

from array import array

cdef signed char WON = 1
cdef signed char LOST = -1
cdef signed char DRAWN = 0


def solve_csr(Py_ssize_t n, succ_ptr, pred_ptr, pred_idx):
    cdef long long[:] sp = array("q", succ_ptr)
    cdef long long[:] pp = array("q", pred_ptr)
    cdef long long[:] pi = array("q", pred_idx) if len(pred_idx) else array("q", [0])
    status_arr = array("b", bytes(n))
    length_arr = array("q", [-1]) * n
    pending_arr = array("q", [0]) * n
    queue_arr = array("q", [0]) * n
    cdef signed char[:] status = status_arr
    cdef long long[:] length = length_arr
    cdef long long[:] pending = pending_arr
    cdef long long[:] queue = queue_arr
    cdef Py_ssize_t head = 0, tail = 0, i, k, y, p
    cdef long long nxt
    cdef bint y_lost
    for i in range(n):
        pending[i] = sp[i + 1] - sp[i]
        if pending[i] == 0:
            status[i] = LOST
            length[i] = 0
            queue[tail] = i
            tail += 1
    while head < tail:
        y = queue[head]
        head += 1
        nxt = length[y] + 1
        y_lost = status[y] == LOST
        for k in range(pp[y], pp[y + 1]):
            p = pi[k]
            if status[p] != DRAWN:
                continue
            if y_lost:
                status[p] = WON
                length[p] = nxt
                queue[tail] = p
                tail += 1
            else:
                pending[p] -= 1
                if pending[p] == 0:
                    status[p] = LOST
                    length[p] = nxt
                    queue[tail] = p
                    tail += 1
    return list(status_arr), list(length_arr)


def kernel_masks(int n, out_masks):
    if n > 62:
        raise ValueError("kernel_masks supports at most 62 nodes")
    cdef unsigned long long[:] om = array("Q", out_masks) if n else array("Q", [0])
    cdef unsigned long long m, full = (<unsigned long long>1) << n, hits
    cdef int i
    cdef bint ok
    found = []
    m = 0
    while m < full:
        ok = True
        for i in range(n):
            hits = om[i] & m
            if (m >> i) & 1:
                if hits:
                    ok = False
                    break
            elif not hits:
                ok = False
                break
        if ok:
            found.append(m)
        m += 1
    return found
