"""Pure-Python fallback for the tf-idf accumulation kernel.

Same operation order as the compiled kernel in _scoring.pyx, so both
backends produce bit-identical scores.
"""


def add_scaled(scores, docs, tfs, idf):
    """scores[docs[i]] += tfs[i] * idf for every posting of one query token."""
    for i in range(docs.shape[0]):
        scores[docs[i]] += tfs[i] * idf
