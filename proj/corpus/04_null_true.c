// expect: reported=1 refuted=0 kind=true
int deref_flag(char flag) {
  int *p = 0;
  int v = 0;
  if (flag > 10)
    v = *p;
  return v;
}
