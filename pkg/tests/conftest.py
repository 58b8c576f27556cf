from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def watermelon_grid(max_n=3, max_t=12, max_y=4, min_t=1, need_thm8=True):
    """(n, t, y) with matching parity; need_thm8 drops t + y < 2."""
    for n in range(1, max_n + 1):
        for y in range(max_y + 1):
            for t in range(max(y, min_t), max_t + 1):
                if (t - y) % 2 or (need_thm8 and t + y < 2):
                    continue
                yield n, t, y
