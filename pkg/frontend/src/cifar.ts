/**
 * CIFAR-10 binary batch reader: 3073-byte records, one label byte in [0, 9]
 * followed by 3072 channel-planar pixel bytes (32x32 RGB).
 */

import { readFileSync } from "node:fs";

export const CIFAR_RECORD_LEN = 3073;
export const CIFAR_CLASSES = 10;
export const CIFAR_IMAGE_BYTES = 3072;

export interface CifarData {
  n: number;
  /** n*3072 bytes, channel-planar per record */
  images: Uint8Array;
  /** n*10 one-hot bytes */
  labels: Uint8Array;
}

export function readCifarFile(path: string): CifarData {
  const data = readFileSync(path);
  if (data.length % CIFAR_RECORD_LEN !== 0) {
    const offset = Math.floor(data.length / CIFAR_RECORD_LEN) * CIFAR_RECORD_LEN;
    throw new Error(`truncated record at offset ${offset}`);
  }
  const n = data.length / CIFAR_RECORD_LEN;
  const images = new Uint8Array(n * CIFAR_IMAGE_BYTES);
  const labels = new Uint8Array(n * CIFAR_CLASSES);
  for (let i = 0; i < n; i++) {
    const off = i * CIFAR_RECORD_LEN;
    const cls = data[off];
    if (cls >= CIFAR_CLASSES) {
      throw new Error(`invalid label ${cls} at offset ${off}`);
    }
    labels[i * CIFAR_CLASSES + cls] = 1;
    images.set(data.subarray(off + 1, off + CIFAR_RECORD_LEN), i * CIFAR_IMAGE_BYTES);
  }
  return { n, images, labels };
}
