"""Benchmark the compiled scoring kernel against the pure-Python fallback.

Builds a synthetic corpus, runs the same query workload through search()
under both backends, checks the results are identical, and reports
timings.

Usage:
    python benchmarks/bench_scoring.py [--docs 20000] [--queries 30] [--repeats 5]
"""
import argparse
import random
import statistics
import time

import numpy as np

from lotkarank import _kernel
from lotkarank.corpus import DocumentRecord
from lotkarank.index import build_index, search


def make_corpus(n_docs, vocab_size, seed):
    rng = random.Random(seed)
    vocab = [f"w{v:04d}" for v in range(vocab_size)]
    weights = [(v + 1) ** -1.05 for v in range(vocab_size)]
    records = []
    for i in range(n_docs):
        records.append(
            DocumentRecord(
                doc_id=f"d{i:06d}",
                title=" ".join(rng.choices(vocab, weights=weights, k=4)),
                body=" ".join(rng.choices(vocab, weights=weights, k=60)),
            )
        )
    queries = [
        " ".join(rng.choices(vocab[:200], weights=weights[:200], k=rng.randint(2, 4)))
        for _ in range(200)
    ]
    return records, queries


def run_workload(index, queries):
    results = []
    for i, query in enumerate(queries):
        results.append(search(query, index, query_id=f"q{i}").entries)
    return results


def bench_kernel_only(backends, repeats):
    """Time add_scaled alone on one large posting list (no result assembly)."""
    rng = np.random.default_rng(0)
    n_docs, n_postings = 200_000, 100_000
    docs = np.sort(rng.choice(n_docs, size=n_postings, replace=False)).astype(np.int32)
    tfs = rng.integers(1, 5, size=n_postings).astype(np.float64)
    timings = {}
    for backend in backends:
        kernel = _kernel._BACKENDS[backend].add_scaled
        scores = np.zeros(n_docs)
        kernel(scores, docs, tfs, 1.5)  # warmup
        samples = []
        for _ in range(repeats):
            started = time.perf_counter()
            kernel(scores, docs, tfs, 1.5)
            samples.append(time.perf_counter() - started)
        timings[backend] = statistics.median(samples)
    print(f"\nkernel only ({n_postings} postings per call)")
    print(f"{'backend':<10}{'s/call':>14}{'postings/s':>14}")
    for backend, seconds in timings.items():
        print(f"{backend:<10}{seconds:>14.6f}{n_postings / seconds:>14.3e}")
    if len(timings) == 2:
        print(f"kernel speedup: {timings['python'] / timings['cython']:.0f}x")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--docs", type=int, default=20000)
    parser.add_argument("--vocab", type=int, default=2000)
    parser.add_argument("--queries", type=int, default=30)
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    print(f"building index: {args.docs} docs, vocab {args.vocab} ...")
    records, queries = make_corpus(args.docs, args.vocab, args.seed)
    queries = queries[: args.queries]
    index = build_index(records)
    print(f"indexed terms: {index.term_count()}")

    backends = ["python"]
    if "cython" in _kernel._BACKENDS:
        backends.insert(0, "cython")
    else:
        print("compiled kernel not available; benchmarking the fallback only")

    original = _kernel.backend_name()
    timings = {}
    baseline = None
    try:
        for backend in backends:
            _kernel.set_backend(backend)
            run_workload(index, queries[:2])  # warmup
            samples = []
            for _ in range(args.repeats):
                started = time.perf_counter()
                results = run_workload(index, queries)
                samples.append(time.perf_counter() - started)
            if baseline is None:
                baseline = results
            elif results != baseline:
                raise AssertionError("backends disagree on search results")
            timings[backend] = statistics.median(samples)
    finally:
        _kernel.set_backend(original)

    print(f"\nend-to-end search ({len(queries)} queries)")
    print(f"{'backend':<10}{'median s/run':>14}{'queries/s':>12}")
    for backend, seconds in timings.items():
        print(f"{backend:<10}{seconds:>14.4f}{len(queries) / seconds:>12.1f}")
    if len(timings) == 2:
        speedup = timings["python"] / timings["cython"]
        print(f"end-to-end speedup: {speedup:.1f}x (identical results verified)")

    bench_kernel_only(backends, args.repeats)


if __name__ == "__main__":
    main()
