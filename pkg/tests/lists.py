"""Family lists as printed in the headline theorem and corollaries, ranges expanded by hand."""


def span(rank, lo, hi):
    return [f"{rank}.{i}" for i in range(lo, hi + 1)]


ALWAYS_INFINITE = (["1.15", "1.16", "1.17"] + span(2, 26, 36) + ["3.9"] + span(3, 13, 31) + span(4, 2, 12)
                   + ["5.1", "5.2", "5.3", "6.1", "7.1", "8.1", "9.1", "10.1"])
SOMETIMES_INFINITE = ["1.10", "2.20", "2.21", "2.22", "3.5", "3.8", "3.10", "4.13"]
LEMMA_ONLY_SOMETIMES = ["2.24", "3.12"]
NONREDUCTIVE = (["2.28", "2.30", "2.31", "2.33", "2.35", "2.36", "3.16", "3.18"] + span(3, 21, 24)
                + ["3.26"] + span(3, 28, 31) + span(4, 8, 12))
SOME_MEMBER_NOT_KE = ["1.10", "2.21", "2.26", "3.13"]
H12_INFINITE = ["2.28", "3.9", "3.14", "4.2"]
