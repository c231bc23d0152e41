/**
 * SplitMix64 stream for script-side draws (shuffling, flip decisions).
 *
 * Same fixed algorithm the engine documents, implemented on BigInt.  The
 * binding itself never uses this: every augmentation draw comes from the
 * engine.  Scripts use it so epochs are reproducible end to end.
 */

const MASK = (1n << 64n) - 1n;
const GOLDEN = 0x9e3779b97f4a7c15n;
const M1 = 0xbf58476d1ce4e5b9n;
const M2 = 0x94d049bb133111ebn;

export function mix64(z: bigint): bigint {
  z &= MASK;
  z = ((z ^ (z >> 30n)) * M1) & MASK;
  z = ((z ^ (z >> 27n)) * M2) & MASK;
  return z ^ (z >> 31n);
}

export class SplitMixStream {
  private readonly key: bigint;
  private counter = 0n;

  constructor(seed: number | bigint, index: number | bigint = 0) {
    this.key = mix64((BigInt(seed) + GOLDEN * (BigInt(index) + 1n)) & MASK);
  }

  nextU64(): bigint {
    this.counter += 1n;
    return mix64((this.key + GOLDEN * this.counter) & MASK);
  }

  /** Uniform float in [0, 1) with 53 random bits. */
  uniform(): number {
    return Number(this.nextU64() >> 11n) / 2 ** 53;
  }

  /** Unbiased integer in [0, n) via rejection sampling. */
  randBelow(n: number): number {
    if (n < 1) throw new Error(`randBelow needs n >= 1, got ${n}`);
    const big = BigInt(n);
    const span = (1n << 64n) - ((1n << 64n) % big);
    for (;;) {
      const v = this.nextU64();
      if (v < span) return Number(v % big);
    }
  }
}
