import type { ParsedSentence, ParsedToken, ParserBackend } from "./types";

export class BackendUnavailableError extends Error {}

/**
 * English NLP backend: sentence segmentation, tokenization, lemmas and
 * universal POS tags from wink-nlp with its pinned lite English model.
 * Fully deterministic for a given model version.
 */
export function loadWinkBackend(): ParserBackend {
  let winkNLP: any;
  let model: any;
  let modelVersion = "unknown";
  try {
    winkNLP = require("wink-nlp");
    model = require("wink-eng-lite-web-model");
    modelVersion = require("wink-eng-lite-web-model/package.json").version;
  } catch (error) {
    throw new BackendUnavailableError(
      "parser backend not available: install it with " +
        "'npm install wink-nlp wink-eng-lite-web-model' " +
        `(${(error as Error).message})`
    );
  }
  const nlp = winkNLP(model);
  const its = nlp.its;

  return {
    name: `wink-eng-lite-web-model@${modelVersion}`,
    parse(body: string): ParsedSentence[] {
      const doc = nlp.readDoc(body);
      const sentences: ParsedSentence[] = [];
      doc.sentences().each((sentence: any) => {
        const tokens: ParsedToken[] = [];
        sentence.tokens().each((token: any) => {
          tokens.push({
            surface: token.out(its.value),
            lemma: token.out(its.lemma),
            pos: token.out(its.pos),
          });
        });
        sentences.push({ text: sentence.out(its.value), tokens });
      });
      return sentences;
    },
  };
}
