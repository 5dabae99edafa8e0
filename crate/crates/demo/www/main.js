import init, { indexSeries, partitionTable, graphLayout } from "./pkg/degree_indices_demo.js";

const $ = (id) => document.getElementById(id);
const palette = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b"];

function fail(el, err) {
  el.innerHTML = `<span class="err">${err}</span>`;
}

function drawSeries() {
  const canvas = $("s-plot");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  let data;
  try {
    data = JSON.parse(indexSeries($("s-family").value, $("s-kind").value,
      +$("s-min").value, +$("s-max").value, $("s-variant").value));
  } catch (e) { return fail($("s-note"), e); }
  const pts = data.points;
  const ys = pts.flatMap((p) => [p.brute, p.closed ?? p.brute]);
  const [x0, x1] = [pts[0].n, pts[pts.length - 1].n];
  const [y0, y1] = [Math.min(...ys), Math.max(...ys)];
  const pad = 40;
  const sx = (n) => pad + (canvas.width - 2 * pad) * (x1 === x0 ? 0.5 : (n - x0) / (x1 - x0));
  const sy = (v) => canvas.height - pad - (canvas.height - 2 * pad) * (y1 === y0 ? 0.5 : (v - y0) / (y1 - y0));

  ctx.strokeStyle = "#999";
  ctx.strokeRect(pad, pad, canvas.width - 2 * pad, canvas.height - 2 * pad);
  ctx.fillStyle = "#444";
  ctx.fillText(`n = ${x0}`, pad, canvas.height - pad + 15);
  ctx.fillText(`n = ${x1}`, canvas.width - pad - 30, canvas.height - pad + 15);
  ctx.fillText(y1.toPrecision(6), 2, pad);
  ctx.fillText(y0.toPrecision(6), 2, canvas.height - pad);

  ctx.strokeStyle = palette[1];
  ctx.beginPath();
  let started = false;
  for (const p of pts) {
    if (p.closed == null) continue;
    started ? ctx.lineTo(sx(p.n), sy(p.closed)) : ctx.moveTo(sx(p.n), sy(p.closed));
    started = true;
  }
  ctx.stroke();
  ctx.fillStyle = palette[0];
  for (const p of pts) {
    ctx.beginPath();
    ctx.arc(sx(p.n), sy(p.brute), 3, 0, 2 * Math.PI);
    ctx.fill();
  }
  const worst = Math.max(0, ...pts.filter((p) => p.rel_error != null).map((p) => p.rel_error));
  $("s-note").textContent =
    `dots: edge sum, line: closed form. Largest relative error ${worst.toExponential(2)}.`;
}

function drawPartition() {
  let data;
  try {
    data = JSON.parse(partitionTable($("p-family").value, +$("p-n").value, $("p-mode").value));
  } catch (e) { return fail($("p-table"), e); }
  const rows = data.classes.map((c) => `<tr><td>E(${c.lo},${c.hi})</td><td>${c.count}</td></tr>`).join("");
  $("p-table").innerHTML =
    `<table><tr><th>class</th><th>edges</th></tr>${rows}<tr><th>total</th><th>${data.edges}</th></tr></table>`;
}

function drawGraph() {
  const canvas = $("g-plot");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  let data;
  try {
    data = JSON.parse(graphLayout($("g-family").value, +$("g-n").value, $("g-mode").value));
  } catch (e) { return fail($("g-legend"), e); }
  const W = canvas.width;
  const labels = [...new Set(data.vertices.map((v) => v.label))].sort((a, b) => a - b);
  const color = (l) => palette[labels.indexOf(l) % palette.length];
  ctx.strokeStyle = "#bbb";
  for (const [u, v] of data.edges) {
    ctx.beginPath();
    ctx.moveTo(data.vertices[u].x * W, data.vertices[u].y * W);
    ctx.lineTo(data.vertices[v].x * W, data.vertices[v].y * W);
    ctx.stroke();
  }
  const r = Math.max(1.5, 6 - data.vertices.length / 200);
  for (const v of data.vertices) {
    ctx.fillStyle = color(v.label);
    ctx.beginPath();
    ctx.arc(v.x * W, v.y * W, r, 0, 2 * Math.PI);
    ctx.fill();
  }
  $("g-legend").innerHTML = labels
    .map((l) => `<span style="color:${color(l)}">&#9679; ${l}</span>`).join(" &nbsp; ");
}

await init();
for (const id of ["s-family", "s-kind", "s-min", "s-max", "s-variant"]) $(id).addEventListener("input", drawSeries);
for (const id of ["p-family", "p-n", "p-mode"]) $(id).addEventListener("input", drawPartition);
for (const id of ["g-family", "g-n", "g-mode"]) $(id).addEventListener("input", drawGraph);
drawSeries();
drawPartition();
drawGraph();
