/**
 * SAUG1 container encode/decode.
 *
 * Layout (little-endian u32 fields):
 *   bytes 0..4    magic "SAUG1"
 *   bytes 5..24   n, h, w, c, labelDim
 *   then          n*h*w*c image bytes, channel-planar per sample
 *   then          n*labelDim label bytes, each 0 or 1
 *
 * Declared sizes must match the buffer length exactly.
 */

const MAGIC = Buffer.from("SAUG1", "ascii");
const HEADER_LEN = 25;

export interface SaugBatch {
  n: number;
  h: number;
  w: number;
  c: number;
  labelDim: number;
  /** n*c*h*w bytes, channel-planar per sample */
  images: Uint8Array;
  /** n*labelDim bytes of 0/1 */
  labels: Uint8Array;
}

export function encodeSaug(batch: SaugBatch): Buffer {
  const { n, h, w, c, labelDim, images, labels } = batch;
  if (images.length !== n * c * h * w) {
    throw new Error(
      `images length ${images.length} does not match n*c*h*w = ${n * c * h * w}`
    );
  }
  if (labels.length !== n * labelDim) {
    throw new Error(
      `labels length ${labels.length} does not match n*labelDim = ${n * labelDim}`
    );
  }
  const header = Buffer.alloc(HEADER_LEN);
  MAGIC.copy(header, 0);
  header.writeUInt32LE(n, 5);
  header.writeUInt32LE(h, 9);
  header.writeUInt32LE(w, 13);
  header.writeUInt32LE(c, 17);
  header.writeUInt32LE(labelDim, 21);
  return Buffer.concat([header, Buffer.from(images), Buffer.from(labels)]);
}

export function decodeSaug(data: Buffer): SaugBatch {
  if (data.length < HEADER_LEN || !data.subarray(0, 5).equals(MAGIC)) {
    throw new Error(`bad magic ${JSON.stringify(data.subarray(0, 5).toString())}`);
  }
  const n = data.readUInt32LE(5);
  const h = data.readUInt32LE(9);
  const w = data.readUInt32LE(13);
  const c = data.readUInt32LE(17);
  const labelDim = data.readUInt32LE(21);
  const expected = HEADER_LEN + n * h * w * c + n * labelDim;
  if (data.length !== expected) {
    throw new Error(
      `container length ${data.length} does not match declared sizes (expected ${expected})`
    );
  }
  const images = new Uint8Array(data.subarray(HEADER_LEN, HEADER_LEN + n * h * w * c));
  const labels = new Uint8Array(data.subarray(HEADER_LEN + n * h * w * c));
  for (let i = 0; i < labels.length; i++) {
    if (labels[i] > 1) {
      throw new Error(`label byte ${labels[i]} at offset ${HEADER_LEN + n * h * w * c + i} is not 0 or 1`);
    }
  }
  return { n, h, w, c, labelDim, images, labels };
}
