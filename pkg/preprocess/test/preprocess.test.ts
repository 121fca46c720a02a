import { execFileSync } from "child_process";
import * as fs from "fs";
import * as os from "os";
import * as path from "path";

import { beforeAll, describe, expect, it } from "vitest";

import { deriveArcs } from "../src/arcs";
import { loadWinkBackend } from "../src/backend";
import { main } from "../src/cli";
import { preprocessArticle, PreprocessError, toJsonLine } from "../src/preprocess";
import { loadRelationMap } from "../src/relmap";
import type { ParsedToken, ParserBackend } from "../src/types";

const GOLDEN_DIR = path.join(__dirname, "golden");
const map = loadRelationMap();

let backend: ParserBackend;
beforeAll(() => {
  backend = loadWinkBackend();
});

function token(surface: string, pos: string, lemma?: string): ParsedToken {
  return { surface, lemma: lemma ?? surface.toLowerCase(), pos };
}

describe("relation map", () => {
  it("is versioned and pins the backend", () => {
    expect(map.version).toBe("relmap-v1");
    expect(map.backend).toBe("wink-eng-lite-web-model@1.8.1");
  });

  it("matches the installed backend version", () => {
    expect(backend.name).toBe(map.backend);
  });
});

describe("deriveArcs", () => {
  it("marks the first verb as root with the sentinel head", () => {
    const arcs = deriveArcs(
      [token("They", "PRON"), token("met", "VERB"), token("today", "NOUN")],
      map
    );
    expect(arcs[0]).toEqual({ rel: "root", head: -1, dep: 1 });
  });

  it("falls back to the first non-punctuation token without a verb", () => {
    const arcs = deriveArcs([token(",", "PUNCT"), token("Chaos", "NOUN")], map);
    expect(arcs[0]).toEqual({ rel: "root", head: -1, dep: 1 });
  });

  it("returns no arcs for an empty sentence", () => {
    expect(deriveArcs([], map)).toEqual([]);
  });

  it("attaches adverbs to the root as advmod", () => {
    const arcs = deriveArcs(
      [token("He", "PRON"), token("spoke", "VERB"), token("bluntly", "ADV")],
      map
    );
    expect(arcs).toContainEqual({ rel: "advmod", head: 1, dep: 2 });
  });

  it("marks predicative adjectives as acomp", () => {
    const arcs = deriveArcs(
      [token("The", "DET"), token("plan", "NOUN"), token("is", "AUX"),
       token("reckless", "ADJ")],
      map
    );
    expect(arcs).toContainEqual({ rel: "acomp", head: 2, dep: 3 });
  });

  it("skips attributive adjectives", () => {
    const arcs = deriveArcs(
      [token("He", "PRON"), token("slammed", "VERB"), token("the", "DET"),
       token("reckless", "ADJ"), token("plan", "NOUN")],
      map
    );
    expect(arcs.filter((a) => a.rel === "acomp")).toEqual([]);
  });

  it("links verb + to + verb as xcomp", () => {
    const arcs = deriveArcs(
      [token("They", "PRON"), token("want", "VERB"), token("to", "PART", "to"),
       token("expand", "VERB"), token("it", "PRON")],
      map
    );
    expect(arcs).toContainEqual({ rel: "xcomp", head: 1, dep: 3 });
  });

  it("references only valid token indices", () => {
    const text = fs.readFileSync(path.join(GOLDEN_DIR, "art1.txt"), "utf-8");
    for (const sentence of backend.parse(text)) {
      const arcs = deriveArcs(sentence.tokens, map);
      for (const arc of arcs) {
        expect(arc.dep).toBeGreaterThanOrEqual(0);
        expect(arc.dep).toBeLessThan(sentence.tokens.length);
        if (arc.rel !== "root") {
          expect(arc.head).toBeGreaterThanOrEqual(0);
          expect(arc.head).toBeLessThan(sentence.tokens.length);
        } else {
          expect(arc.head).toBe(-1);
        }
      }
    }
  });
});

describe("preprocessArticle", () => {
  it("produces one sentence object per segmented sentence with a root arc", () => {
    const doc = preprocessArticle(
      { id: "two", body: "The vote passed. Critics fumed loudly." },
      backend
    );
    expect(doc.sentences.length).toBe(2);
    for (const sentence of doc.sentences) {
      expect(sentence.label).toBeNull();
      expect(sentence.arcs.some((a) => a.rel === "root" && a.head === -1)).toBe(true);
      expect(sentence.tokens.length).toBeGreaterThan(0);
      for (const t of sentence.tokens) {
        expect(t.lemma).toBe(t.lemma.toLowerCase());
      }
    }
  });

  it("rejects an empty body", () => {
    expect(() => preprocessArticle({ id: "e", body: "   " }, backend)).toThrow(
      PreprocessError
    );
  });

  it("is deterministic", () => {
    const body = fs.readFileSync(path.join(GOLDEN_DIR, "art2.txt"), "utf-8");
    const a = toJsonLine(preprocessArticle({ id: "g", body }, backend));
    const b = toJsonLine(preprocessArticle({ id: "g", body }, backend));
    expect(a).toBe(b);
  });
});

describe("golden outputs", () => {
  for (const n of [1, 2, 3]) {
    it(`article ${n} matches the frozen JSONL byte for byte`, () => {
      const body = fs.readFileSync(path.join(GOLDEN_DIR, `art${n}.txt`), "utf-8");
      const frozen = fs.readFileSync(path.join(GOLDEN_DIR, `art${n}.jsonl`), "utf-8");
      const doc = preprocessArticle({ id: `golden-${n}`, body }, backend);
      expect(toJsonLine(doc) + "\n").toBe(frozen);
    });
  }

  it("golden set passes the primary loader's validation", () => {
    const combined = path.join(os.tmpdir(), `preprocess-golden-${process.pid}.jsonl`);
    const lines = [1, 2, 3]
      .map((n) => fs.readFileSync(path.join(GOLDEN_DIR, `art${n}.jsonl`), "utf-8"))
      .join("");
    fs.writeFileSync(combined, lines, "utf-8");
    try {
      const out = execFileSync(
        "python3",
        [
          "-c",
          "import sys\n" +
            "from opinionrank.corpus import load_corpus\n" +
            "corpus = load_corpus(sys.argv[1])\n" +
            "print(len(corpus.documents))\n",
          combined,
        ],
        { encoding: "utf-8" }
      );
      expect(out.trim()).toBe("3");
    } finally {
      fs.unlinkSync(combined);
    }
  });
});

describe("cli", () => {
  it("appends one JSONL line per run", () => {
    const dir = fs.mkdtempSync(path.join(os.tmpdir(), "preprocess-cli-"));
    const out = path.join(dir, "corpus.jsonl");
    for (const n of [1, 2]) {
      const code = main([
        "--in", path.join(GOLDEN_DIR, `art${n}.txt`),
        "--id", `cli-${n}`,
        "--out", out,
      ]);
      expect(code).toBe(0);
    }
    const lines = fs.readFileSync(out, "utf-8").trim().split("\n");
    expect(lines.length).toBe(2);
    expect(JSON.parse(lines[0]).id).toBe("cli-1");
    expect(JSON.parse(lines[1]).id).toBe("cli-2");
  });

  it("exits 2 on a missing input file", () => {
    expect(main(["--in", "/nope/missing.txt", "--id", "x", "--out", "/tmp/x.jsonl"]))
      .toBe(2);
  });

  it("exits 2 on missing flags", () => {
    expect(main(["--in", "somefile.txt"])).toBe(2);
  });
});
