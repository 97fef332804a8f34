// Drops stale responses: each view keeps one guard, every refetch takes a
// new token, and only the response holding the latest token is applied.

export class LatestOnly {
  private current = 0;

  next(): number {
    return ++this.current;
  }

  isCurrent(token: number): boolean {
    return token === this.current;
  }
}

export type JsonFetcher = (url: string) => Promise<unknown>;

export const httpJson: JsonFetcher = async (url) => {
  const response = await fetch(url);
  if (!response.ok) {
    throw new Error(`${url} -> HTTP ${response.status}`);
  }
  return response.json();
};

// Resolves to null when a newer request superseded this one while the
// response was in flight; errors from the fetcher propagate as usual.
export async function fetchLatest<T>(
  guard: LatestOnly,
  url: string,
  fetcher: JsonFetcher = httpJson,
): Promise<T | null> {
  const token = guard.next();
  const body = (await fetcher(url)) as T;
  return guard.isCurrent(token) ? body : null;
}
