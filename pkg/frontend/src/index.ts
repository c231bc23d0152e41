export { embedImage, extractSecret, quantizeImage } from "./bitops.js";
export { augmentBatch } from "./binding.js";
export type { AugmentOptions, AugmentResult, AugmentationRecord, BoundBatch } from "./binding.js";
export { encodeSaug, decodeSaug } from "./saug.js";
export type { SaugBatch } from "./saug.js";
export { readCifarFile, CIFAR_CLASSES, CIFAR_RECORD_LEN } from "./cifar.js";
export type { CifarData } from "./cifar.js";
export { CifarLoader, hflip } from "./dataloader.js";
export type { LoaderBatch, LoaderOptions } from "./dataloader.js";
export { engineVersion, runEngine } from "./engine.js";
export { SplitMixStream, mix64 } from "./rng.js";

/** Must match the engine version; checked by engineVersion() in tests. */
export const VERSION = "0.1.0";
