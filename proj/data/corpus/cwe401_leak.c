#include <stdlib.h>
#include <string.h>

char *make_buffer(size_t n)
{
    char *buf = malloc(n);
    memset(buf, 0, n);
    return buf;
}

int main(void)
{
    char *b = make_buffer(128);
    b[0] = 'x';
    return 0;
}
