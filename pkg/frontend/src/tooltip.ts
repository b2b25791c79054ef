// One shared tooltip element per container; carries the raw payload value
// in data-raw alongside the formatted text.

export function ensureTooltip(container: HTMLElement): HTMLElement {
  let tip = container.querySelector<HTMLElement>(".tooltip");
  if (!tip) {
    tip = container.ownerDocument.createElement("div");
    tip.className = "tooltip";
    tip.style.display = "none";
    container.appendChild(tip);
  }
  return tip;
}

export function showTooltip(
  container: HTMLElement,
  text: string,
  raw: number | null,
  x = 0,
  y = 0,
): HTMLElement {
  const tip = ensureTooltip(container);
  tip.textContent = text;
  tip.dataset.raw = raw === null ? "" : String(raw);
  tip.style.display = "block";
  tip.style.left = `${x + 12}px`;
  tip.style.top = `${y + 12}px`;
  return tip;
}

export function hideTooltip(container: HTMLElement): void {
  const tip = container.querySelector<HTMLElement>(".tooltip");
  if (tip) tip.style.display = "none";
}
