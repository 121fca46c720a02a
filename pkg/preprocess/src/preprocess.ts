import { deriveArcs } from "./arcs";
import { loadRelationMap, type RelationMap } from "./relmap";
import type {
  DocumentJson,
  ParserBackend,
  RawArticle,
  SentenceJson,
} from "./types";

export class PreprocessError extends Error {}

export interface PreprocessOptions {
  relationMap?: RelationMap;
  warn?: (message: string) => void;
}

/**
 * Convert one raw article into a document in the annotated-corpus
 * format: sentence-segmented, tokenized, lemmatized, with root and
 * marker dependency arcs derived per the relation map. Gold labels are
 * unknown for raw text, so every sentence is emitted unlabeled.
 */
export function preprocessArticle(
  raw: RawArticle,
  backend: ParserBackend,
  options: PreprocessOptions = {}
): DocumentJson {
  if (!raw.body.trim()) {
    throw new PreprocessError(`article ${JSON.stringify(raw.id)} has an empty body`);
  }
  const map = options.relationMap ?? loadRelationMap();
  const warn = options.warn ?? ((message) => console.warn(message));

  const sentences: SentenceJson[] = backend.parse(raw.body).map((parsed, index) => {
    const arcs = deriveArcs(parsed.tokens, map);
    if (parsed.tokens.length > 0 && arcs.length === 0) {
      warn(
        `article ${raw.id} sentence ${index}: no analyzable structure; emitted without arcs`
      );
    }
    return {
      text: parsed.text,
      tokens: parsed.tokens.map((t) => ({ surface: t.surface, lemma: t.lemma })),
      arcs,
      label: null,
    };
  });

  if (sentences.length === 0) {
    throw new PreprocessError(
      `article ${JSON.stringify(raw.id)} produced no sentences`
    );
  }
  return { id: raw.id, sentences };
}

/** One JSONL line, key order fixed by the wire types. */
export function toJsonLine(doc: DocumentJson): string {
  return JSON.stringify(doc);
}
