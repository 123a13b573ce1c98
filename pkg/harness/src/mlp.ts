/**
 * Deterministic multilayer perceptron with fixed binary connection masks.
 *
 * A masked layer multiplies its weight matrix elementwise by the mask on
 * every forward pass, and masked entries receive no gradient, so they
 * stay exactly zero through training. The unmasked code path performs
 * the same arithmetic without the mask factor; with an all-ones mask the
 * two paths multiply by 1.0 and are bit-identical.
 *
 * All loops run in a fixed order and all randomness comes from the
 * seeded generator, so training is bitwise reproducible.
 */

import { SplitMix64 } from "./rng";

export class MaskedLinear {
  readonly inSize: number;
  readonly outSize: number;
  readonly mask: Uint8Array | null;
  readonly weights: Float64Array; // row-major inSize x outSize
  readonly bias: Float64Array;
  private readonly gradW: Float64Array;
  private readonly gradB: Float64Array;

  constructor(inSize: number, outSize: number, mask: Uint8Array | null, rng: SplitMix64) {
    if (mask !== null && mask.length !== inSize * outSize) {
      throw new Error(
        `mask has ${mask.length} entries, layer needs ${inSize}x${outSize}`
      );
    }
    this.inSize = inSize;
    this.outSize = outSize;
    this.mask = mask;
    this.weights = new Float64Array(inSize * outSize);
    this.bias = new Float64Array(outSize);
    this.gradW = new Float64Array(inSize * outSize);
    this.gradB = new Float64Array(outSize);
    const scale = Math.sqrt(6 / (inSize + outSize));
    // draw every entry regardless of the mask so the random stream does
    // not depend on the topology, then zero the masked positions
    for (let k = 0; k < this.weights.length; k++) {
      this.weights[k] = (rng.uniform() * 2 - 1) * scale;
    }
    if (mask !== null) {
      for (let k = 0; k < this.weights.length; k++) {
        if (!mask[k]) this.weights[k] = 0;
      }
    }
  }

  forward(x: Float64Array, out: Float64Array): void {
    out.set(this.bias);
    const { weights, mask, inSize, outSize } = this;
    for (let i = 0; i < inSize; i++) {
      const xi = x[i];
      if (mask === null) {
        for (let j = 0; j < outSize; j++) out[j] += xi * weights[i * outSize + j];
      } else {
        for (let j = 0; j < outSize; j++) {
          out[j] += xi * weights[i * outSize + j] * mask[i * outSize + j];
        }
      }
    }
  }

  /** Accumulate gradients for one sample; fills gradIn when provided. */
  backward(x: Float64Array, gradOut: Float64Array, gradIn: Float64Array | null): void {
    const { weights, mask, inSize, outSize, gradW, gradB } = this;
    for (let j = 0; j < outSize; j++) gradB[j] += gradOut[j];
    for (let i = 0; i < inSize; i++) {
      const xi = x[i];
      let acc = 0;
      for (let j = 0; j < outSize; j++) {
        const k = i * outSize + j;
        const m = mask === null ? 1 : mask[k];
        gradW[k] += xi * gradOut[j] * m; // masked entries carry no gradient
        acc += weights[k] * m * gradOut[j];
      }
      if (gradIn !== null) gradIn[i] = acc;
    }
  }

  step(learningRate: number, batchSize: number): void {
    const lr = learningRate / batchSize;
    for (let k = 0; k < this.weights.length; k++) {
      this.weights[k] -= lr * this.gradW[k];
      this.gradW[k] = 0;
    }
    for (let j = 0; j < this.outSize; j++) {
      this.bias[j] -= lr * this.gradB[j];
      this.gradB[j] = 0;
    }
  }

  nonZeroWeights(): number {
    let count = 0;
    for (const w of this.weights) if (w !== 0) count++;
    return count;
  }
}

export class Mlp {
  readonly layers: MaskedLinear[];
  private readonly acts: Float64Array[];
  private readonly grads: Float64Array[];

  /**
   * Layer widths follow the masks: masks[i] connects widths[i] to
   * widths[i+1] (null = dense). Hidden activations are ReLU; the output
   * feeds a softmax cross-entropy loss.
   */
  constructor(widths: number[], masks: (Uint8Array | null)[], rng: SplitMix64) {
    if (masks.length !== widths.length - 1) {
      throw new Error(`${widths.length} widths need ${widths.length - 1} masks`);
    }
    this.layers = masks.map(
      (mask, i) => new MaskedLinear(widths[i], widths[i + 1], mask, rng)
    );
    this.acts = widths.map((w) => new Float64Array(w));
    this.grads = widths.map((w) => new Float64Array(w));
  }

  /** Forward pass; returns the logits buffer (reused between calls). */
  forward(x: Float64Array): Float64Array {
    this.acts[0].set(x);
    for (let l = 0; l < this.layers.length; l++) {
      this.layers[l].forward(this.acts[l], this.acts[l + 1]);
      if (l < this.layers.length - 1) {
        const a = this.acts[l + 1];
        for (let j = 0; j < a.length; j++) if (a[j] < 0) a[j] = 0;
      }
    }
    return this.acts[this.layers.length];
  }

  /** Cross-entropy loss for one sample plus gradient accumulation. */
  trainSample(x: Float64Array, label: number): number {
    const logits = this.forward(x);
    const probs = softmax(logits);
    const gradOut = this.grads[this.layers.length];
    for (let j = 0; j < probs.length; j++) gradOut[j] = probs[j];
    gradOut[label] -= 1;
    for (let l = this.layers.length - 1; l >= 0; l--) {
      const gradIn = l > 0 ? this.grads[l] : null;
      this.layers[l].backward(this.acts[l], this.grads[l + 1], gradIn);
      if (l > 0 && gradIn) {
        const a = this.acts[l];
        for (let j = 0; j < gradIn.length; j++) if (a[j] <= 0) gradIn[j] = 0;
      }
    }
    return -Math.log(Math.max(probs[label], 1e-300));
  }

  step(learningRate: number, batchSize: number): void {
    for (const layer of this.layers) layer.step(learningRate, batchSize);
  }

  predict(x: Float64Array): number {
    const logits = this.forward(x);
    let best = 0;
    for (let j = 1; j < logits.length; j++) if (logits[j] > logits[best]) best = j;
    return best;
  }

  /** Flat copy of every parameter, for exact reproducibility checks. */
  snapshot(): Float64Array {
    let total = 0;
    for (const layer of this.layers) total += layer.weights.length + layer.bias.length;
    const out = new Float64Array(total);
    let offset = 0;
    for (const layer of this.layers) {
      out.set(layer.weights, offset);
      offset += layer.weights.length;
      out.set(layer.bias, offset);
      offset += layer.bias.length;
    }
    return out;
  }
}

function softmax(logits: Float64Array): Float64Array {
  let max = logits[0];
  for (let j = 1; j < logits.length; j++) if (logits[j] > max) max = logits[j];
  const out = new Float64Array(logits.length);
  let sum = 0;
  for (let j = 0; j < logits.length; j++) {
    out[j] = Math.exp(logits[j] - max);
    sum += out[j];
  }
  for (let j = 0; j < logits.length; j++) out[j] /= sum;
  return out;
}
