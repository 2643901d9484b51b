"""Build an interval scheme, extract dense subsets, and embed into them."""

from fractions import Fraction

from orderchains import (
    MiddleThirds,
    Tag,
    build_scheme,
    dense_embed,
    dyadic_stream,
    gap_midpoint_stream,
    gap_selector,
    make_element,
    make_order,
    middle_thirds_endpoint_stream,
    prune_successor_endpoints,
    splitting_depth,
)


def main():
    scheme = build_scheme(MiddleThirds(), depth=2)
    print("depth-2 scheme (word, left, right, removed gap):")
    for line in scheme.dump_lines():
        print(" ", line)
    print()

    # Two extractors thin a stream down to a subset that stays dense
    # in itself: pruned closed-interval endpoints, and gap midpoints.
    endpoints = middle_thirds_endpoint_stream()
    pruned = prune_successor_endpoints(endpoints, scheme, 8)
    print("pruned endpoints from the first 8 stream values:", ", ".join(map(str, pruned)))

    midpoints = gap_midpoint_stream()
    selected = gap_selector(midpoints, scheme, 8)
    print("gap midpoints selected for the scheme:", ", ".join(map(str, selected)))
    print()

    # Splitting depth grows with how finely a set divides its span.
    stream = dyadic_stream()
    for k in (3, 5, 8):
        values = stream.prefix(2**k - 1)
        print(f"splitting depth of the first {2**k - 1} dyadics:", splitting_depth(values))
    sparse = [Fraction(1), Fraction(2), Fraction(4), Fraction(8)]
    print("splitting depth of a sparse quadruple:", splitting_depth(sparse))
    print()

    # Any finite linear arrangement embeds into a dense stream in order.
    int_less = make_order("IntLess")
    elems = [make_element(Tag.INT, v) for v in (2, 0, 1)]
    images = dense_embed(elems, int_less, dyadic_stream())
    print("order-preserving embedding into the dyadics:")
    for el in elems:
        print(f"  {el} -> {images[el]}")


if __name__ == "__main__":
    main()
