#include <stdlib.h>

int main(void)
{
    char *ptr = malloc(8);
    ptr[0] = 0;
    free(ptr);
    return 0;
}
