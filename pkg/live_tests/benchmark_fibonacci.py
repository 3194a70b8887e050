"""Script to time conjugate array construction on a large Fibonacci word."""

import time

from bwtcat.core.conjugate_array import conjugate_array
from bwtcat.core.transform import r
from bwtcat.enums.ca_builder import CABuilder
from bwtcat.families.standard import fibonacci

ORDER = 34


def main():
    """Build the conjugate array of fibonacci(ORDER) and report timings."""
    print(f"Generating fibonacci({ORDER})...")
    word = fibonacci(ORDER)
    print(f"Length: {len(word)}")

    start = time.perf_counter()
    order = conjugate_array(word, CABuilder.DOUBLING)
    elapsed = time.perf_counter() - start
    print(f"Conjugate array: {elapsed:.2f}s for {len(order)} rotations")

    start = time.perf_counter()
    runs = r(word, CABuilder.DOUBLING)
    elapsed = time.perf_counter() - start
    print(f"r = {runs} in {elapsed:.2f}s")


if __name__ == "__main__":
    main()
