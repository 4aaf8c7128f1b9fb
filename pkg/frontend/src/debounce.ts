// Control changes arrive in bursts (slider drags), so recomputation is
// debounced; 150 ms keeps the loop feeling live without flooding the API.
export const DEBOUNCE_MS = 150;

export type Cancel = () => void;

export function makeDebouncer(waitMs: number = DEBOUNCE_MS) {
  let handle: ReturnType<typeof setTimeout> | undefined;
  const debounced = (op: () => void): void => {
    if (handle !== undefined) clearTimeout(handle);
    handle = setTimeout(() => {
      handle = undefined;
      op();
    }, waitMs);
  };
  const cancel: Cancel = () => {
    if (handle !== undefined) clearTimeout(handle);
    handle = undefined;
  };
  return { debounced, cancel };
}
