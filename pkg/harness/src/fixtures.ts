/**
 * Full-scale reference results for context in summaries.
 *
 * Published mean best top-1 accuracies of construction-based versus
 * random-expander topologies on large CNN benchmarks. Kept as reference
 * data for the summary layout only; the desk-scale harness does not
 * reproduce these numbers.
 */

export interface ReferenceRow {
  architecture: string;
  constructionBased: number;
  expander: number;
  absoluteGap: number;
}

export const FULL_SCALE_REFERENCE: ReferenceRow[] = [
  { architecture: "VGG-16 BN", constructionBased: 85.66, expander: 86.17, absoluteGap: 0.51 },
  { architecture: "MobileNet", constructionBased: 74.46, expander: 74.87, absoluteGap: 0.41 },
  { architecture: "DenseNet", constructionBased: 75.43, expander: 75.74, absoluteGap: 0.31 },
  { architecture: "ResNet50", constructionBased: 76.22, expander: 76.78, absoluteGap: 0.56 },
];
