"""Pure-Python compute kernels.

These four functions are the inner loops of the whole package: word
rewriting, contraction products, generalized Stirling rows, and graph
attachment steps.  `backend.py` swaps in the compiled versions when the
extension built; this module is the reference and must stay dependency
free.  Coefficients are plain ints or Fractions (callers decide); loop
bookkeeping is exact integer arithmetic throughout.
"""

from __future__ import annotations

from math import comb, factorial

__all__ = ["normal_order_word", "nf_mul", "stirling_row_update", "graph_step"]


def _inversions(w) -> int:
    inv = 0
    zeros = 0
    for s in w:
        if s == 0:
            zeros += 1
        else:
            inv += zeros
    return inv


def normal_order_word(word):
    """Normal-order a product word over {0: annihilator, 1: creator}.

    Rewrites the leftmost `a a†` pair via  a a† = a† a + 1  until no
    inversions remain, merging identical intermediate words.  Words are
    processed in decreasing inversion count so each distinct word is
    expanded exactly once (both rewrite children have strictly fewer
    inversions).  Returns {(dag, ann): coefficient} with positive integer
    coefficients.
    """
    w0 = tuple(word)
    inv0 = _inversions(w0)
    buckets: dict = {inv0: {w0: 1}}
    done: dict = {}
    level = inv0
    while level > 0:
        frontier = buckets.pop(level, None)
        if frontier:
            for w, c in frontier.items():
                zeros_before = 0
                pos = -1
                for i in range(len(w) - 1):
                    if w[i] == 0:
                        if w[i + 1] == 1:
                            pos = i
                            break
                        zeros_before += 1
                swapped = w[:pos] + (1, 0) + w[pos + 2:]
                dropped = w[:pos] + w[pos + 2:]
                ones_after = 0
                for i in range(pos + 2, len(w)):
                    if w[i] == 1:
                        ones_after += 1
                for nw, ninv in ((swapped, level - 1),
                                 (dropped, level - 1 - zeros_before - ones_after)):
                    b = buckets.get(ninv)
                    if b is None:
                        b = buckets[ninv] = {}
                    b[nw] = b.get(nw, 0) + c
        level -= 1
    for w, c in buckets.pop(0, {}).items():
        dag = sum(w)
        key = (dag, len(w) - dag)
        done[key] = done.get(key, 0) + c
    return {k: v for k, v in done.items() if v}


def nf_mul(a, b):
    """Product of two normal forms given as {(dag, ann): coeff} dicts.

    (a†)^p a^q (a†)^r a^s = sum_k k! C(q,k) C(r,k) (a†)^{p+r-k} a^{q+s-k}.
    """
    out: dict = {}
    for (p, q), ca in a.items():
        for (r, s), cb in b.items():
            c0 = ca * cb
            m = q if q < r else r
            for k in range(m + 1):
                c = c0 * (factorial(k) * comb(q, k) * comb(r, k))
                key = (p + r - k, q + s - k)
                v = out.get(key)
                v = c if v is None else v + c
                if v:
                    out[key] = v
                elif key in out:
                    del out[key]
    return out


def stirling_row_update(r, M, n, products):
    """Row n of the generalized Stirling triangle, from row n-1 products.

    products: P[j] = prod_{i=1}^{n-1} (j + i*r) for j = 0..M*(n-1); pass
    [1] for n = 1 (row 0 is the single entry 1).  Returns (row, new_products)
    where row[k] = (1/k!) sum_j C(k,j) (-1)^{k-j} P'[j]^M for k = 0..M*n and
    P'[j] = P[j]*(j + n*r) extended out to j = M*n.  The k! division must be
    exact; a remainder raises ArithmeticError.
    """
    width = M * n + 1
    newp = []
    for j in range(width):
        if j < len(products):
            newp.append(products[j] * (j + n * r))
        else:
            p = 1
            for i in range(1, n + 1):
                p *= j + i * r
            newp.append(p)
    row = []
    fact_k = 1
    for k in range(width):
        if k:
            fact_k *= k
        total = 0
        sign = -1 if k & 1 else 1
        binom = 1
        for j in range(k + 1):
            total += sign * binom * newp[j] ** M
            sign = -sign
            binom = binom * (k - j) // (j + 1)
        q, rem = divmod(total, fact_k)
        if rem:
            raise ArithmeticError(
                f"non-integral generalized Stirling value at r={r} M={M} n={n} k={k}")
        row.append(q)
    return row, newp


def graph_step(state, blocks):
    """Attach one building block (a left factor) to every partial diagram.

    state: {(out_lines, in_lines): weight}.  blocks: [(r_out, s_in, alpha)].
    Joining j of the block's s_in input lines to the k available outputs
    multiplies the weight by alpha * C(s_in, j) * k*(k-1)*...*(k-j+1).
    """
    out: dict = {}
    for (k, l), w in state.items():
        for (r, s, alpha) in blocks:
            m = s if s < k else k
            ff = 1
            for j in range(m + 1):
                c = w * alpha * (comb(s, j) * ff)
                key = (k - j + r, l + s - j)
                v = out.get(key)
                v = c if v is None else v + c
                if v:
                    out[key] = v
                elif key in out:
                    del out[key]
                ff *= k - j
    return out
