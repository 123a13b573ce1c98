/**
 * Deterministic 64-bit randomness (SplitMix64 over BigInt).
 *
 * Everything random in the harness flows through this generator so runs
 * are bit-reproducible from their seeds on any platform.
 */

const MASK64 = (1n << 64n) - 1n;
const GAMMA = 0x9e3779b97f4a7c15n;

export function mix64(value: bigint): bigint {
  let z = value & MASK64;
  z = ((z ^ (z >> 30n)) * 0xbf58476d1ce4e5b9n) & MASK64;
  z = ((z ^ (z >> 27n)) * 0x94d049bb133111ebn) & MASK64;
  return z ^ (z >> 31n);
}

export function deriveSeed(master: number | bigint, index: number): bigint {
  return mix64((BigInt(master) + BigInt(index + 1) * GAMMA) & MASK64);
}

export class SplitMix64 {
  private state: bigint;

  constructor(seed: number | bigint) {
    this.state = BigInt(seed) & MASK64;
  }

  nextU64(): bigint {
    this.state = (this.state + GAMMA) & MASK64;
    return mix64(this.state);
  }

  /** Uniform float in [0, 1) with 53 bits of precision. */
  uniform(): number {
    return Number(this.nextU64() >> 11n) / 2 ** 53;
  }

  /** Unbiased uniform integer in [0, bound). */
  below(bound: number): number {
    if (bound <= 0) {
      throw new RangeError(`bound must be positive, got ${bound}`);
    }
    const big = BigInt(bound);
    const threshold = ((1n << 64n) / big) * big;
    for (;;) {
      const value = this.nextU64();
      if (value < threshold) {
        return Number(value % big);
      }
    }
  }

  shuffle<T>(items: T[]): void {
    for (let i = items.length - 1; i > 0; i--) {
      const j = this.below(i + 1);
      const tmp = items[i];
      items[i] = items[j];
      items[j] = tmp;
    }
  }
}
