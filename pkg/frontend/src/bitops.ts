/**
 * Bit-level embed/extract, element-wise over uint8 arrays.
 *
 * These are pure bit algebra with no randomness, so they are implemented
 * natively; parity with the engine CLI is covered by tests.
 */

function checkDepth(k: number): void {
  if (!Number.isInteger(k) || k < 1 || k > 7) {
    throw new Error(`bit depth must be an integer in [1, 7], got ${k}`);
  }
}

/** Replace the k low bits of each cover byte with the top k bits of the secret. */
export function embedImage(cover: Uint8Array, secret: Uint8Array, k: number): Uint8Array {
  checkDepth(k);
  if (cover.length !== secret.length) {
    throw new Error(`cover and secret lengths differ: ${cover.length} vs ${secret.length}`);
  }
  const out = new Uint8Array(cover.length);
  const high = 0xff & (0xff << k);
  for (let i = 0; i < cover.length; i++) {
    out[i] = (cover[i] & high) | (secret[i] >> (8 - k));
  }
  return out;
}

/** Recover the embedded approximation: k low bits, re-aligned high. */
export function extractSecret(stego: Uint8Array, k: number): Uint8Array {
  checkDepth(k);
  const out = new Uint8Array(stego.length);
  const low = (1 << k) - 1;
  for (let i = 0; i < stego.length; i++) {
    out[i] = 0xff & ((stego[i] & low) << (8 - k));
  }
  return out;
}

/** Map each byte to the nearest lower multiple of 2^k. */
export function quantizeImage(img: Uint8Array, k: number): Uint8Array {
  checkDepth(k);
  const out = new Uint8Array(img.length);
  const high = 0xff & (0xff << k);
  for (let i = 0; i < img.length; i++) {
    out[i] = img[i] & high;
  }
  return out;
}
