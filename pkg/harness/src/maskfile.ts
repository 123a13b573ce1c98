/**
 * Reader for the binary MaskFile interchange format.
 *
 * Layout: magic "SRNM", then little-endian 32-bit words (version, rows,
 * cols, flags, seed low, seed high, density numerator, density
 * denominator), then optional row/column permutations (u32 each),
 * a row-major LSB-first bitset payload padded to whole bytes per row,
 * and optional per-edge (pass, diagonal) u16 label pairs.
 *
 * The reader verifies the magic, the version, the byte accounting, and
 * that the header density matches the payload popcount exactly.
 */

export class MaskIntegrityError extends Error {}

export interface MaskFile {
  rows: number;
  cols: number;
  /** effective bits, permutations already applied; length rows*cols */
  bits: Uint8Array;
  edgeCount: number;
  densityNum: number;
  densityDen: number;
  seed: bigint;
  permuted: boolean;
}

const MAGIC = "SRNM";
const FLAG_PERMS = 1;
const FLAG_LABELS = 2;
const HEADER_BYTES = 36;

export function parseMaskFile(data: Buffer): MaskFile {
  if (data.length < HEADER_BYTES || data.toString("latin1", 0, 4) !== MAGIC) {
    throw new MaskIntegrityError("not a mask file: bad magic");
  }
  const version = data.readUInt32LE(4);
  if (version !== 1) {
    throw new MaskIntegrityError(`unsupported mask file version ${version}`);
  }
  const rows = data.readUInt32LE(8);
  const cols = data.readUInt32LE(12);
  const flags = data.readUInt32LE(16);
  const seedLo = data.readUInt32LE(20);
  const seedHi = data.readUInt32LE(24);
  const densityNum = data.readUInt32LE(28);
  const densityDen = data.readUInt32LE(32);

  let offset = HEADER_BYTES;
  let rowPerm: Uint32Array | null = null;
  let colPerm: Uint32Array | null = null;
  if (flags & FLAG_PERMS) {
    rowPerm = new Uint32Array(rows);
    for (let i = 0; i < rows; i++, offset += 4) rowPerm[i] = data.readUInt32LE(offset);
    colPerm = new Uint32Array(cols);
    for (let j = 0; j < cols; j++, offset += 4) colPerm[j] = data.readUInt32LE(offset);
  }

  const stride = Math.ceil(cols / 8);
  if (data.length < offset + rows * stride) {
    throw new MaskIntegrityError("mask file truncated before payload end");
  }
  const base = new Uint8Array(rows * cols);
  let edgeCount = 0;
  for (let i = 0; i < rows; i++) {
    for (let j = 0; j < cols; j++) {
      const byte = data[offset + i * stride + (j >> 3)];
      const bit = (byte >> (j & 7)) & 1;
      base[i * cols + j] = bit;
      edgeCount += bit;
    }
  }
  offset += rows * stride;
  if (flags & FLAG_LABELS) {
    offset += edgeCount * 4; // (pass, diagonal) u16 pairs; not needed here
  }
  if (offset !== data.length) {
    throw new MaskIntegrityError(
      `${data.length - offset} byte(s) unaccounted for after mask payload`
    );
  }
  if (densityDen === 0 || edgeCount * densityDen !== densityNum * rows * cols) {
    throw new MaskIntegrityError(
      `header density ${densityNum}/${densityDen} does not match popcount ${edgeCount}`
    );
  }

  let bits = base;
  if (rowPerm && colPerm) {
    bits = new Uint8Array(rows * cols);
    for (let i = 0; i < rows; i++) {
      for (let j = 0; j < cols; j++) {
        bits[i * cols + j] = base[rowPerm[i] * cols + colPerm[j]];
      }
    }
  }
  return {
    rows,
    cols,
    bits,
    edgeCount,
    densityNum,
    densityDen,
    seed: (BigInt(seedHi) << 32n) | BigInt(seedLo),
    permuted: Boolean(flags & FLAG_PERMS),
  };
}
