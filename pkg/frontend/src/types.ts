// Wire types for the rtv HTTP API. Every field mirrors a server response
// key; the client renders these numbers but never recomputes them.

export interface RiverData {
  buckets: string[];
  order: string[];
  baseline: number[];
  bands: Record<string, [number, number][]>;
  counts: Record<string, number[]>;
}

export interface GraphNode {
  name: string;
  collaborator_count: number;
  weighted_degree: number;
}

export interface GraphEdge {
  source: string;
  target: string;
  weight: number;
}

export interface GraphData {
  nodes: GraphNode[];
  edges: GraphEdge[];
}

export interface PaperBox {
  paper_id: string;
  title: string;
  year: number;
  citations: number;
  link: string;
}

export interface VenueStack {
  venue: string;
  total_citations: number;
  boxes: PaperBox[];
}

export interface VenuesData {
  venues: VenueStack[];
}

export interface RaceEntry {
  word: string;
  count: number;
}

export interface RaceFrame {
  bucket: string;
  entries: RaceEntry[];
}

export interface WordsData {
  mode: string;
  k: number;
  frames: RaceFrame[];
}

export interface Envelope<T> {
  view: string;
  params_echo: Record<string, string | number>;
  paper_count: number;
  data: T;
}

export interface CorpusStats {
  paper_count: number;
  date_min: string | null;
  date_max: string | null;
  venue_count: number;
  field_count: number;
  author_count: number;
}
