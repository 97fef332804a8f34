// Co-author network with a deterministic force-directed layout. Positions
// are seeded from author-name hashes so the same graph always renders the
// same picture; node radius grows with weighted degree.

import type { GraphData } from "../types.js";

export interface SimNode {
  name: string;
  collaboratorCount: number;
  weightedDegree: number;
  x: number;
  y: number;
  radius: number;
}

export interface SimLink {
  source: number; // index into nodes
  target: number;
  weight: number;
}

export interface NetworkModel {
  nodes: SimNode[];
  links: SimLink[];
}

// FNV-1a, stable across platforms.
export function nameHash(name: string): number {
  let h = 0x811c9dc5;
  for (let i = 0; i < name.length; i++) {
    h ^= name.charCodeAt(i);
    h = Math.imul(h, 0x01000193) >>> 0;
  }
  return h;
}

export function nodeRadius(weightedDegree: number, maxDegree: number): number {
  const base = 6;
  if (maxDegree <= 0) return base;
  return base + 14 * Math.sqrt(weightedDegree / maxDegree);
}

export function networkModel(data: GraphData, width: number, height: number): NetworkModel {
  const maxDegree = Math.max(0, ...data.nodes.map((n) => n.weighted_degree));
  const nodes: SimNode[] = data.nodes.map((n) => {
    const h = nameHash(n.name);
    return {
      name: n.name,
      collaboratorCount: n.collaborator_count,
      weightedDegree: n.weighted_degree,
      x: (h % 1000) / 1000 * width,
      y: ((h >>> 10) % 1000) / 1000 * height,
      radius: nodeRadius(n.weighted_degree, maxDegree),
    };
  });
  const index = new Map(nodes.map((n, i) => [n.name, i]));
  const links: SimLink[] = data.edges.map((e) => ({
    source: index.get(e.source)!,
    target: index.get(e.target)!,
    weight: e.weight,
  }));
  return { nodes, links };
}

// Fixed-iteration spring/repulsion layout; no randomness, so the result is
// a pure function of the seeded starting positions.
export function forceLayout(model: NetworkModel, width: number, height: number, iterations = 200): void {
  const { nodes, links } = model;
  if (nodes.length === 0) return;
  const area = width * height;
  const k = Math.sqrt(area / nodes.length) * 0.6;

  for (let iter = 0; iter < iterations; iter++) {
    const temp = 0.1 * Math.min(width, height) * (1 - iter / iterations) + 1;
    const dx = new Array(nodes.length).fill(0);
    const dy = new Array(nodes.length).fill(0);

    for (let i = 0; i < nodes.length; i++) {
      for (let j = i + 1; j < nodes.length; j++) {
        let vx = nodes[i].x - nodes[j].x;
        let vy = nodes[i].y - nodes[j].y;
        let dist = Math.hypot(vx, vy);
        if (dist < 0.01) {
          // deterministic tie-break for coincident seeds
          vx = (i - j) * 0.01;
          vy = 0.01;
          dist = Math.hypot(vx, vy);
        }
        const force = (k * k) / dist;
        dx[i] += (vx / dist) * force;
        dy[i] += (vy / dist) * force;
        dx[j] -= (vx / dist) * force;
        dy[j] -= (vy / dist) * force;
      }
    }
    for (const link of links) {
      const a = nodes[link.source];
      const b = nodes[link.target];
      let vx = a.x - b.x;
      let vy = a.y - b.y;
      const dist = Math.max(0.01, Math.hypot(vx, vy));
      const force = (dist * dist) / k * Math.min(link.weight, 4) * 0.25;
      dx[link.source] -= (vx / dist) * force;
      dy[link.source] -= (vy / dist) * force;
      dx[link.target] += (vx / dist) * force;
      dy[link.target] += (vy / dist) * force;
    }
    for (let i = 0; i < nodes.length; i++) {
      // gentle pull to the center keeps disconnected nodes on screen
      dx[i] += (width / 2 - nodes[i].x) * 0.02;
      dy[i] += (height / 2 - nodes[i].y) * 0.02;
      const step = Math.hypot(dx[i], dy[i]);
      if (step > 0) {
        nodes[i].x += (dx[i] / step) * Math.min(step, temp);
        nodes[i].y += (dy[i] / step) * Math.min(step, temp);
      }
      nodes[i].x = Math.max(nodes[i].radius, Math.min(width - nodes[i].radius, nodes[i].x));
      nodes[i].y = Math.max(nodes[i].radius, Math.min(height - nodes[i].radius, nodes[i].y));
    }
  }
}

export function renderNetwork(host: HTMLElement, data: GraphData): void {
  host.innerHTML = "";
  const width = host.clientWidth || 560;
  const height = host.clientHeight || 260;
  const svg = document.createElementNS("http://www.w3.org/2000/svg", "svg");
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);

  const model = networkModel(data, width, height);
  forceLayout(model, width, height);

  for (const link of model.links) {
    const a = model.nodes[link.source];
    const b = model.nodes[link.target];
    const line = document.createElementNS("http://www.w3.org/2000/svg", "line");
    line.setAttribute("x1", a.x.toFixed(1));
    line.setAttribute("y1", a.y.toFixed(1));
    line.setAttribute("x2", b.x.toFixed(1));
    line.setAttribute("y2", b.y.toFixed(1));
    line.setAttribute("class", "net-link");
    line.setAttribute("stroke-width", String(Math.min(1 + link.weight, 6)));
    const title = document.createElementNS("http://www.w3.org/2000/svg", "title");
    title.textContent = `${a.name} — ${b.name}: ${link.weight} joint paper(s)`;
    line.append(title);
    svg.append(line);
  }
  for (const node of model.nodes) {
    const group = document.createElementNS("http://www.w3.org/2000/svg", "g");
    const circle = document.createElementNS("http://www.w3.org/2000/svg", "circle");
    circle.setAttribute("cx", node.x.toFixed(1));
    circle.setAttribute("cy", node.y.toFixed(1));
    circle.setAttribute("r", node.radius.toFixed(1));
    circle.setAttribute("class", "net-node");
    const title = document.createElementNS("http://www.w3.org/2000/svg", "title");
    title.textContent = `${node.name}\ncollaborators: ${node.collaboratorCount}\nweighted degree: ${node.weightedDegree}`;
    circle.append(title);
    const label = document.createElementNS("http://www.w3.org/2000/svg", "text");
    label.setAttribute("x", node.x.toFixed(1));
    label.setAttribute("y", (node.y - node.radius - 3).toFixed(1));
    label.setAttribute("text-anchor", "middle");
    label.setAttribute("class", "net-label");
    label.textContent = node.name;
    group.append(circle, label);
    svg.append(group);
  }
  host.append(svg);
}
