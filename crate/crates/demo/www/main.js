import init, { grid_sssp, pagerank_sweep, bipartite_matching } from "./pkg/hybrid_bsp_demo.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);
const COLORS = { standard: "#d62728", am: "#ff7f0e", hybrid: "#1f77b4" };

function statsTable(rows, extra = []) {
  const head = ["engine", "iterations", "remote messages", "pseudo-supersteps", ...extra.map((e) => e[0])];
  const body = rows
    .map((r) => {
      const cells = [r.engine, r.iterations, r.remote_messages, r.pseudo_supersteps, ...extra.map((e) => e[1](r))];
      return `<tr>${cells.map((c) => `<td>${c}</td>`).join("")}</tr>`;
    })
    .join("");
  return `<table><tr>${head.map((h) => `<th>${h}</th>`).join("")}</tr>${body}</table>`;
}

function showError(out, report) {
  if (report.error) {
    out.innerHTML = `<p class="error">${report.error}</p>`;
    return true;
  }
  return false;
}

let source = 0;

function runGrid() {
  const w = num("g-w"), h = num("g-h");
  if (source >= w * h) source = 0;
  const report = JSON.parse(grid_sssp(w, h, num("g-k"), $("g-blocks").checked, source));
  if (showError($("g-out"), report)) return;
  const canvas = $("g-canvas");
  const ctx = canvas.getContext("2d");
  const cell = Math.max(1, Math.floor(Math.min(canvas.width / w, canvas.height / h)));
  const max = Math.max(...report.distances.filter((d) => d !== null), 1);
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  report.distances.forEach((d, v) => {
    const x = (v % w) * cell, y = Math.floor(v / w) * cell;
    const light = report.boundary[v] ? 35 : 60;
    ctx.fillStyle = d === null ? "#eee" : `hsl(${240 - (240 * d) / max}, 70%, ${light}%)`;
    ctx.fillRect(x, y, cell, cell);
  });
  ctx.strokeStyle = "#000";
  ctx.strokeRect((source % w) * cell, Math.floor(source / w) * cell, cell, cell);
  $("g-out").innerHTML = statsTable(report.engines);
  canvas.onclick = (e) => {
    const r = canvas.getBoundingClientRect();
    const cx = Math.floor((e.clientX - r.left) / cell), cy = Math.floor((e.clientY - r.top) / cell);
    if (cx < w && cy < h) {
      source = cy * w + cx;
      runGrid();
    }
  };
}

function runPagerank() {
  const report = JSON.parse(pagerank_sweep(num("p-n"), num("p-k"), num("p-seed")));
  if (showError($("p-out"), report)) return;
  const canvas = $("p-canvas");
  const ctx = canvas.getContext("2d");
  const pad = 40, W = canvas.width - 2 * pad, H = canvas.height - 2 * pad;
  const pts = report.points;
  const max = Math.max(...pts.flatMap((p) => p.engines.map((e) => e.iterations)));
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.fillStyle = "#222";
  ctx.font = "12px sans-serif";
  pts.forEach((p, i) => ctx.fillText(p.delta.toExponential(0), pad + (i * W) / (pts.length - 1) - 12, canvas.height - 12));
  ctx.fillText(`${max} iterations`, 4, pad - 8);
  for (const engine of Object.keys(COLORS)) {
    ctx.strokeStyle = COLORS[engine];
    ctx.beginPath();
    pts.forEach((p, i) => {
      const it = p.engines.find((e) => e.engine === engine).iterations;
      const x = pad + (i * W) / (pts.length - 1), y = pad + H - (it / max) * H;
      i ? ctx.lineTo(x, y) : ctx.moveTo(x, y);
    });
    ctx.stroke();
    ctx.fillStyle = COLORS[engine];
    ctx.fillText(engine, canvas.width - 80, pad + 16 * Object.keys(COLORS).indexOf(engine));
  }
  const last = pts[pts.length - 1];
  $("p-out").innerHTML =
    `<p>${report.vertices} vertices, ${report.edges} edges. Results for Δ=${last.delta.toExponential(0)}:</p>` +
    statsTable(last.engines);
}

function runMatching() {
  const report = JSON.parse(bipartite_matching(num("m-l"), num("m-r"), num("m-p"), num("m-k"), num("m-seed")));
  if (showError($("m-out"), report)) return;
  const canvas = $("m-canvas");
  const ctx = canvas.getContext("2d");
  const L = report.left, R = report.right;
  const pos = (v) =>
    v < L
      ? [80, 20 + ((canvas.height - 40) * (v + 0.5)) / L]
      : [canvas.width - 80, 20 + ((canvas.height - 40) * (v - L + 0.5)) / R];
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.strokeStyle = "#ddd";
  for (const [a, b] of report.edges) {
    ctx.beginPath();
    ctx.moveTo(...pos(a));
    ctx.lineTo(...pos(b));
    ctx.stroke();
  }
  const hybrid = report.runs[1];
  ctx.strokeStyle = COLORS.hybrid;
  ctx.lineWidth = 2;
  for (const [a, b] of hybrid.pairs) {
    ctx.beginPath();
    ctx.moveTo(...pos(a));
    ctx.lineTo(...pos(b));
    ctx.stroke();
  }
  ctx.lineWidth = 1;
  const hues = (p) => `hsl(${(p * 67) % 360}, 60%, 50%)`;
  for (let v = 0; v < L + R; v++) {
    ctx.fillStyle = hues(report.partition[v]);
    ctx.beginPath();
    ctx.arc(...pos(v), 3, 0, 2 * Math.PI);
    ctx.fill();
  }
  $("m-out").innerHTML =
    "<p>Blue edges: the hybrid result. Dot colour: partition.</p>" +
    statsTable(
      report.runs.map((r) => ({ ...r.stats, program: r.program, size: r.pairs.length, ok: r.valid && r.maximal })),
      [["program", (r) => r.program], ["matched pairs", (r) => r.size], ["valid & maximal", (r) => r.ok]],
    );
}

await init();
$("g-run").onclick = runGrid;
$("p-run").onclick = runPagerank;
$("m-run").onclick = runMatching;
runGrid();
runPagerank();
runMatching();
