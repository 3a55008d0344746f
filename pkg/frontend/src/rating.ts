/** Rating-expression validation for matrix cells.
 *
 * Mirrors the server's grammar: a sum of terms, each a decimal number or an
 * optionally-scaled indeterminacy symbol I ("7", "I", "2.5-0.5I", "1+1+I").
 * Used only to validate cell input and flag indeterminate entries; every
 * displayed score comes from the API, never from this parser.
 */

export interface ParsedRating {
  det: number;
  ind: number;
}

export class RatingSyntaxError extends Error {
  constructor(message: string, readonly position: number) {
    super(`${message} (position ${position})`);
  }
}

const NUMBER_RE = /^(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?/;

export function parseRating(token: string): ParsedRating {
  const text = token;
  let pos = 0;
  const skipWs = () => {
    while (pos < text.length && /\s/.test(text[pos])) pos += 1;
  };

  let det = 0;
  let ind = 0;
  skipWs();
  if (pos >= text.length) throw new RatingSyntaxError("empty rating", pos);
  let sign = 1;
  if (text[pos] === "+" || text[pos] === "-") {
    sign = text[pos] === "-" ? -1 : 1;
    pos += 1;
    skipWs();
  }
  for (;;) {
    let coeff: number | null = null;
    const match = NUMBER_RE.exec(text.slice(pos));
    if (match) {
      coeff = Number(match[0]);
      if (!Number.isFinite(coeff)) {
        throw new RatingSyntaxError(`number '${match[0]}' out of range`, pos);
      }
      pos += match[0].length;
      skipWs();
    }
    if (pos < text.length && text[pos] === "I") {
      pos += 1;
      ind += sign * (coeff === null ? 1 : coeff);
    } else if (coeff !== null) {
      det += sign * coeff;
    } else {
      const found = pos < text.length ? `, found '${text[pos]}'` : "";
      throw new RatingSyntaxError(`expected a number or 'I'${found}`, pos);
    }

    skipWs();
    if (pos >= text.length) {
      if (!Number.isFinite(det) || !Number.isFinite(ind)) {
        throw new RatingSyntaxError("expression overflows", text.length);
      }
      return { det, ind };
    }
    if (text[pos] !== "+" && text[pos] !== "-") {
      throw new RatingSyntaxError(`unexpected character '${text[pos]}'`, pos);
    }
    sign = text[pos] === "-" ? -1 : 1;
    pos += 1;
    skipWs();
    if (pos >= text.length) throw new RatingSyntaxError("trailing operator", pos);
  }
}

/** null when the token parses, otherwise the error message. */
export function ratingError(token: string): string | null {
  try {
    parseRating(token);
    return null;
  } catch (error) {
    return error instanceof RatingSyntaxError ? error.message : String(error);
  }
}

export function isIndeterminate(token: string): boolean {
  try {
    return parseRating(token).ind !== 0;
  } catch {
    return false;
  }
}
