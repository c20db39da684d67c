"""Independent Python model of the trace generators.

Recomputes SplitMix64 outputs and the serialized text of small generated
traces; the values printed here are frozen into tests/unit/test_workload.cpp.
"""
import bisect
import math

MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed):
        self.state = seed & MASK

    def next(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def unit(self):
        return (self.next() >> 11) * 2.0 ** -53


def sampler(weights):
    cdf, total = [], 0.0
    for w in weights:
        total += w
        cdf.append(total)
    def draw(rng):
        u = rng.unit() * cdf[-1]
        return min(bisect.bisect_right(cdf, u), len(cdf) - 1)
    return draw


def zipf(seed, length, num_regs, s):
    rng = SplitMix64(seed)
    draw = sampler([math.pow(r + 1, -s) for r in range(num_regs)])
    return [f"{i} R GPR {draw(rng)}" for i in range(length)]


def alu(seed, length, weights):
    rng = SplitMix64(seed)
    draw = sampler(weights)
    return [f"{i} A {draw(rng)}" for i in range(length)]


def skewed(seed, length, lines, hot_fraction, hot_weight, line_bytes, write_fraction):
    rng = SplitMix64(seed)
    hot = min(max(math.ceil(hot_fraction * lines), 1), lines)
    cold = lines - hot
    hot_mass = hot * hot_weight
    p_hot = hot_mass / (hot_mass + cold)
    def pick(n):
        return min(int(rng.unit() * n), n - 1)
    out = []
    for i in range(length):
        is_hot = cold == 0 or rng.unit() < p_hot
        line = pick(hot) if is_hot else hot + pick(cold)
        kind = "W" if rng.unit() < write_fraction else "R"
        out.append(f"{i} M {kind} {line * line_bytes} D")
    return out


def fnv1a(data):
    h = 0xCBF29CE484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001B3) & MASK
    return h


def text(lines):
    return "# emaware trace v1\n" + "".join(l + "\n" for l in lines)


if __name__ == "__main__":
    r = SplitMix64(1234567)
    print("splitmix64(1234567):", [r.next() for _ in range(5)])
    print("zipf head:", zipf(42, 6, 16, 1.0))
    print("alu head:", alu(7, 6, [0.2, 0.5, 0.2, 0.1]))
    print("skewed head:", skewed(9, 6, 1024, 0.1, 10.0, 64, 0.5))
    print("zipf 10000 fnv: 0x%016x" % fnv1a(text(zipf(42, 10000, 16, 1.0)).encode()))
    print("alu 10000 fnv: 0x%016x" % fnv1a(text(alu(7, 10000, [0.2, 0.5, 0.2, 0.1])).encode()))
    print("skewed 10000 fnv: 0x%016x" % fnv1a(text(skewed(9, 10000, 1024, 0.1, 10.0, 64, 0.5)).encode()))
