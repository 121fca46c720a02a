// Wire types for the annotated-corpus JSONL format consumed by the
// ranking pipeline. Key order matters for byte-stable output, so the
// builders below construct objects in a fixed order.

export interface TokenJson {
  surface: string;
  lemma: string;
}

export interface ArcJson {
  rel: string;
  head: number; // token index, or -1 for the root arc
  dep: number;
}

export interface SentenceJson {
  text: string;
  tokens: TokenJson[];
  arcs: ArcJson[];
  label: "opinion" | "fact" | null;
}

export interface DocumentJson {
  id: string;
  sentences: SentenceJson[];
}

export interface RawArticle {
  id: string;
  body: string;
}

// What the parser backend produces per token before arc derivation.
export interface ParsedToken {
  surface: string;
  lemma: string;
  pos: string; // universal POS tag
}

export interface ParsedSentence {
  text: string;
  tokens: ParsedToken[];
}

export interface ParserBackend {
  /** Identifier including the pinned model version. */
  name: string;
  parse(body: string): ParsedSentence[];
}

export const ROOT_HEAD = -1;
