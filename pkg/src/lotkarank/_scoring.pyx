# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled tf-idf accumulation kernel.

Must stay bit-identical to _scoring_py: one multiply and one add per
posting, in posting order (the extension is compiled with fp-contraction
disabled so no fused multiply-adds sneak in).
"""


def add_scaled(double[::1] scores, const int[::1] docs, const double[::1] tfs, double idf):
    """scores[docs[i]] += tfs[i] * idf for every posting of one query token."""
    cdef Py_ssize_t i, n = docs.shape[0]
    for i in range(n):
        scores[docs[i]] += tfs[i] * idf
