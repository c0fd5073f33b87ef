"""Pure-Python staircase kernel; same interface as the compiled ``_kernel``."""

NEG = -(1 << 62)


def _size(n):
    size = 2
    while size < n + 2:
        size <<= 1
    return size


def _find_first_above(tree, size, lo, v):
    # Leftmost leaf index >= lo with value > v, or -1.
    if lo >= size:
        return -1
    i = lo + size
    while True:
        if tree[i] > v:
            while i < size:
                i <<= 1
                if tree[i] <= v:
                    i += 1
            return i - size
        while i & 1:
            i >>= 1
        if i == 0:
            return -1
        i += 1


def _find_last_above(tree, size, hi, v):
    # Rightmost leaf index <= hi with value > v, or -1.
    if hi < 0:
        return -1
    i = hi + size
    while True:
        if tree[i] > v:
            while i < size:
                i = (i << 1) | 1
                if tree[i] <= v:
                    i -= 1
            return i - size
        while not i & 1:
            i >>= 1
        if i == 1:
            return -1
        i -= 1


def run_staircase(seq, last_init, n):
    """Execute Greedy on ``seq`` (keys in 1..n).

    ``last_init[k]`` is the initial last-touch time of key ``k`` (``NEG`` when
    the column is empty); index 0 is unused. Returns ``(offsets, touched)``:
    the keys touched at time ``i`` are ``touched[offsets[i-1]:offsets[i]]``,
    ascending.
    """
    size = _size(n)
    tree = [NEG] * (2 * size)
    for k in range(1, n + 1):
        tree[size + k] = last_init[k]
    for j in range(size - 1, 0, -1):
        a, b = tree[2 * j], tree[2 * j + 1]
        tree[j] = a if a > b else b

    offsets = [0]
    touched = []
    for t, x in enumerate(seq, start=1):
        base = tree[size + x]
        left = []
        v, y = base, x - 1
        while True:
            y = _find_last_above(tree, size, y, v)
            if y < 1:
                break
            left.append(y)
            v = tree[size + y]
            y -= 1
        left.reverse()
        touched.extend(left)
        v, y = base, x + 1
        while True:
            y = _find_first_above(tree, size, y, v)
            if y < 0 or y > n:
                break
            touched.append(y)
            v = tree[size + y]
            y += 1
        for k in touched[offsets[-1]:] + [x]:
            j = size + k
            tree[j] = t
            j >>= 1
            while j and tree[j] < t:
                tree[j] = t
                j >>= 1
        offsets.append(len(touched))
    return offsets, touched
