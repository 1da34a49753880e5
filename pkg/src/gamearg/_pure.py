"""Pure-Python kernels. Same contract as the compiled ``_core`` module."""

from collections import deque

WON = 1
LOST = -1
DRAWN = 0


def solve_csr(n, succ_ptr, pred_ptr, pred_idx):
    """Retrograde stage solver over integer node ids ``0..n-1``.

    ``succ_ptr`` gives out-degrees via consecutive differences and
    ``pred_ptr``/``pred_idx`` is the CSR of the reversed edge relation.
    Returns ``(status, length)`` lists; drawn nodes get length ``-1``.
    """
    status = [DRAWN] * n
    length = [-1] * n
    pending = [succ_ptr[i + 1] - succ_ptr[i] for i in range(n)]
    queue = deque()
    for i in range(n):
        if pending[i] == 0:
            status[i] = LOST
            length[i] = 0
            queue.append(i)
    # FIFO order keeps lengths non-decreasing, so a node turns won at its
    # cheapest lost successor and lost at its most expensive won one.
    while queue:
        y = queue.popleft()
        nxt = length[y] + 1
        y_lost = status[y] == LOST
        for k in range(pred_ptr[y], pred_ptr[y + 1]):
            p = pred_idx[k]
            if status[p] != DRAWN:
                continue
            if y_lost:
                status[p] = WON
                length[p] = nxt
                queue.append(p)
            else:
                pending[p] -= 1
                if pending[p] == 0:
                    status[p] = LOST
                    length[p] = nxt
                    queue.append(p)
    return status, length


def kernel_masks(n, out_masks):
    """All bitmasks ``m`` over ``n`` nodes that are independent and absorbing."""
    found = []
    full = 1 << n
    for m in range(full):
        ok = True
        for i in range(n):
            hits = out_masks[i] & m
            if (m >> i) & 1:
                if hits:
                    ok = False
                    break
            elif not hits:
                ok = False
                break
        if ok:
            found.append(m)
    return found
