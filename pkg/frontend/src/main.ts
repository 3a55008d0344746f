/** DOM wiring: matrix editor, controls and the interval-band chart. */

import { HttpApiClient } from "./api.js";
import { layoutChart, suggestedKMax } from "./chart.js";
import { isIndeterminate, ratingError } from "./rating.js";
import { AppStore } from "./state.js";

const SVG_NS = "http://www.w3.org/2000/svg";

const store = new AppStore(new HttpApiClient());

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  if (text !== undefined) node.textContent = text;
  return node;
}

function renderMatrix(root: HTMLElement): void {
  root.replaceChildren();
  const draft = store.draft;
  if (!draft) {
    root.append(el("p", { class: "hint" }, "Load the sample problem to begin."));
    return;
  }
  const cellErrors = store.cellErrors();
  const weightErrors = store.weightErrors();
  const table = el("table", { class: "matrix" });

  const head = el("tr");
  head.append(el("th", {}, "criterion"), el("th", {}, "weight"));
  for (const alt of draft.alternatives) head.append(el("th", {}, alt.id));
  table.append(head);

  draft.ratings.forEach((row, i) => {
    const tr = el("tr");
    tr.append(el("td", { class: "criterion" }, draft.criteria[i].label));

    const weightCell = el("td");
    const weightInput = el("input", {
      class: weightErrors.has(i) ? "invalid" : "",
      value: String(draft.criteria[i].weight),
      size: "4",
    }) as HTMLInputElement;
    weightInput.addEventListener("change", () => {
      store.setWeight(i, Number(weightInput.value));
    });
    weightCell.append(weightInput);
    if (weightErrors.has(i)) weightCell.append(el("span", { class: "cell-error" }, weightErrors.get(i)!));
    tr.append(weightCell);

    row.forEach((cell, j) => {
      const td = el("td");
      const token = String(cell);
      const error = cellErrors.get(`${i},${j}`);
      const input = el("input", {
        class: [error ? "invalid" : "", isIndeterminate(token) ? "indeterminate" : ""].join(" ").trim(),
        value: token,
        size: "6",
      }) as HTMLInputElement;
      input.addEventListener("input", () => {
        const message = ratingError(input.value);
        input.classList.toggle("invalid", message !== null);
      });
      input.addEventListener("change", () => store.setRating(i, j, input.value));
      td.append(input);

      const toggle = el("button", { class: "i-toggle", title: "mark indeterminate", type: "button" }, "I");
      toggle.addEventListener("click", () => store.setRating(i, j, "I"));
      td.append(toggle);
      if (error) td.append(el("span", { class: "cell-error" }, error));
      tr.append(td);
    });
    table.append(tr);
  });
  root.append(table);
}

function renderChart(root: HTMLElement): void {
  root.replaceChildren();
  const result = store.result;
  const draft = store.draft;
  if (!result || !draft) return;
  const ids = draft.alternatives.map((a) => a.id);
  const layout = layoutChart(result, ids);

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("width", String(layout.width));
  svg.setAttribute("height", String(layout.height));
  svg.setAttribute("viewBox", `0 0 ${layout.width} ${layout.height}`);

  const axis = document.createElementNS(SVG_NS, "line");
  axis.setAttribute("x1", String(layout.ticks[0].x));
  axis.setAttribute("x2", String(layout.ticks[layout.ticks.length - 1].x));
  axis.setAttribute("y1", String(layout.axisY));
  axis.setAttribute("y2", String(layout.axisY));
  axis.setAttribute("class", "axis");
  svg.append(axis);
  for (const tick of layout.ticks) {
    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String(tick.x));
    label.setAttribute("y", String(layout.axisY + 16));
    label.setAttribute("text-anchor", "middle");
    label.setAttribute("class", "tick-label");
    label.textContent = String(tick.value);
    svg.append(label);
  }

  for (const lane of layout.lanes) {
    const group = document.createElementNS(SVG_NS, "g");
    group.setAttribute("class", `lane${lane.selected ? " selected" : ""}`);

    const name = document.createElementNS(SVG_NS, "text");
    name.setAttribute("x", "8");
    name.setAttribute("y", String(lane.y + lane.height / 2 + 4));
    name.setAttribute("class", "lane-label");
    name.textContent = lane.id;
    group.append(name);

    if (lane.crisp) {
      const line = document.createElementNS(SVG_NS, "line");
      line.setAttribute("x1", String(lane.x));
      line.setAttribute("x2", String(lane.x));
      line.setAttribute("y1", String(lane.y));
      line.setAttribute("y2", String(lane.y + lane.height));
      line.setAttribute("class", "crisp");
      group.append(line);
    } else {
      const band = document.createElementNS(SVG_NS, "rect");
      band.setAttribute("x", String(lane.x));
      band.setAttribute("y", String(lane.y));
      band.setAttribute("width", String(lane.width));
      band.setAttribute("height", String(lane.height));
      band.setAttribute("class", "band");
      group.append(band);
    }

    const caption = document.createElementNS(SVG_NS, "text");
    caption.setAttribute("x", String(lane.x + lane.width + 8));
    caption.setAttribute("y", String(lane.y + lane.height / 2 + 4));
    caption.setAttribute("class", "caption");
    caption.textContent = lane.caption;
    group.append(caption);

    svg.append(group);
  }
  root.append(svg);
}

function renderSensitivity(root: HTMLElement): void {
  root.replaceChildren();
  if (!store.sensitivity.length) return;
  const strip = el("div", { class: "sensitivity" });
  strip.append(el("span", { class: "strip-title" }, "winner by k: "));
  for (const step of store.sensitivity) {
    const prefix = step.kAbove !== undefined ? `k > ${step.kAbove}` : `k = ${step.k}`;
    strip.append(el("span", { class: "step" }, `${prefix}: ${step.selected}`));
  }
  root.append(strip);
}

function renderResult(root: HTMLElement): void {
  root.replaceChildren();
  const result = store.result;
  if (!result) return;
  const list = el("ul", { class: "scores" });
  result.neutroScores.forEach((score, index) => {
    const id = store.draft?.alternatives[index]?.id ?? String(index);
    const item = el(
      "li",
      { class: id === result.selected ? "selected" : "" },
      `${id}: ${score}  [${result.intervals[index][0]}, ${result.intervals[index][1]}]`,
    );
    list.append(item);
  });
  root.append(list);
  root.append(el("p", { class: "ranking" }, `ranking: ${result.ranking.join(" > ")}`));
  for (const contention of result.contentions) {
    root.append(
      el(
        "p",
        { class: "contention" },
        `${contention.crisp} vs ${contention.interval}: wins while k ≤ ${contention.kCritical}`,
      ),
    );
  }
  for (const warning of result.warnings) {
    root.append(el("p", { class: "warning" }, warning));
  }
}

function init(): void {
  const app = document.getElementById("app");
  if (!app) return;

  const toolbar = el("div", { class: "toolbar" });
  const loadButton = el("button", { type: "button" }, "Load sample");
  const saveButton = el("button", { type: "button" }, "Save & evaluate");
  const dirtyFlag = el("span", { class: "dirty-flag" });
  toolbar.append(loadButton, saveButton, dirtyFlag);

  const errorBanner = el("div", { class: "banner", hidden: "hidden" });
  const matrixRoot = el("div", { id: "matrix" });

  const controls = el("div", { class: "controls" });
  const kSlider = el("input", { type: "range", min: "0", max: "1", step: "0.01", value: "0" }) as HTMLInputElement;
  const kLabel = el("span", { class: "k-label" }, "k = 0");
  const iMinInput = el("input", { size: "5", value: "0" }) as HTMLInputElement;
  const iMaxInput = el("input", { size: "5", value: "1" }) as HTMLInputElement;
  controls.append(
    el("label", {}, "k "),
    kSlider,
    kLabel,
    el("label", {}, " I from "),
    iMinInput,
    el("label", {}, " to "),
    iMaxInput,
  );

  const chartRoot = el("div", { id: "chart" });
  const resultRoot = el("div", { id: "result" });
  const sensitivityRoot = el("div", { id: "sensitivity" });

  app.append(toolbar, errorBanner, matrixRoot, controls, chartRoot, resultRoot, sensitivityRoot);

  loadButton.addEventListener("click", () => {
    void store.loadSample().then(() => store.save()).then(() => store.refresh());
  });
  saveButton.addEventListener("click", () => {
    void store.save().then(() => store.refresh());
  });
  kSlider.addEventListener("input", () => {
    store.setK(Number(kSlider.value));
  });
  const applyBounds = () => {
    store.setBounds(Number(iMinInput.value), Number(iMaxInput.value));
  };
  iMinInput.addEventListener("change", applyBounds);
  iMaxInput.addEventListener("change", applyBounds);

  store.subscribe(() => {
    renderMatrix(matrixRoot);
    renderChart(chartRoot);
    renderResult(resultRoot);
    renderSensitivity(sensitivityRoot);
    dirtyFlag.textContent = store.dirty ? "unsaved changes" : "";
    saveButton.toggleAttribute("disabled", !store.canSave());
    kLabel.textContent = `k = ${store.controls.k}`;
    if (store.result) {
      const max = suggestedKMax(store.result);
      if (Number(kSlider.max) < max) kSlider.max = String(max);
    }
    if (store.error) {
      errorBanner.textContent = store.error;
      errorBanner.removeAttribute("hidden");
    } else {
      errorBanner.setAttribute("hidden", "hidden");
    }
  });
}

init();
